#include "nlo/smith.hpp"

#include <utility>

namespace nlo {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& D = f.D;
  const std::size_t rows = D.rows(), cols = D.cols();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    auto bring_min_to_pivot = [&](bool whole_block) {
      std::size_t br = rows, bc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (br == rows || a < best) {
            best = a;
            br = i;
            bc = j;
          }
        }
      if (br == rows) return false;
      swap_rows(D, t, br);
      swap_rows(f.U, t, br);
      swap_cols(D, t, bc);
      swap_cols(f.V, t, bc);
      return true;
    };
    if (!bring_min_to_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(D, i, t, -q);
        add_row(f.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(D, j, t, -q);
        add_col(f.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(false);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, 1);
            add_row(f.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.U(t, c) = -f.U(t, c);
    }
  }
  f.rank = t;
  return f;
}

IntMatrix abelianization_matrix(const Presentation& pres) {
  const auto& gens = pres.generators().generators();
  IntMatrix m(pres.relators().size(), gens.size());
  for (std::size_t i = 0; i < pres.relators().size(); ++i)
    for (const auto& s : pres.relators()[i].syllables())
      m(i, pres.generators().index_of(s.generator)) += s.exponent;
  return m;
}

std::optional<Integer> AbelianGroup::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

AbelianGroup h1(const Presentation& pres) { return Abelianization(pres).group(); }

Abelianization::Abelianization(const Presentation& pres)
    : generators_(pres.generators()), smith_(smith_normal_form(abelianization_matrix(pres))) {
  const std::size_t n = generators_.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= smith_.rank) {
      free_columns_.push_back(j);
      continue;
    }
    const Integer& d = smith_.D(j, j);
    if (d > 1) torsion_columns_.emplace_back(j, d);
  }
  group_.free_rank = free_columns_.size();
  for (const auto& [col, d] : torsion_columns_) group_.torsion.push_back(d);
}

std::vector<Integer> Abelianization::class_of(const Word& w) const {
  std::vector<Integer> e(generators_.size());
  for (const auto& s : w.syllables()) {
    std::size_t i = generators_.index_of(s.generator);
    if (i == generators_.size())
      throw DomainError(std::string("generator '") + s.generator + "' is not in the alphabet");
    e[i] += s.exponent;
  }
  auto coord = [&](std::size_t col) {
    Integer c = 0;
    for (std::size_t i = 0; i < e.size(); ++i) c += e[i] * smith_.V(i, col);
    return c;
  };
  std::vector<Integer> out;
  for (std::size_t col : free_columns_) out.push_back(coord(col));
  for (const auto& [col, d] : torsion_columns_) {
    Integer c = coord(col) % d;
    if (c < 0) c += d;
    out.push_back(c);
  }
  return out;
}

Integer Abelianization::free_class(const Word& w) const {
  if (group_.free_rank != 1 || !group_.torsion.empty())
    throw DomainError("free_class requires H1 = Z");
  return class_of(w).front();
}

}  // namespace nlo
