#include "nlo/coset.hpp"

#include <sstream>

namespace nlo {

CosetTable::CosetTable(Alphabet generators, std::vector<std::int32_t> entries, Status status)
    : generators_(std::move(generators)), entries_(std::move(entries)), status_(status) {}

std::size_t CosetTable::column_of(char letter) const {
  std::size_t i = generators_.index_of(letter_generator(letter));
  if (i == generators_.size())
    throw DomainError(std::string("letter '") + letter + "' is not in the coset table's alphabet");
  return 2 * i + (letter_is_inverse(letter) ? 1 : 0);
}

std::int32_t CosetTable::act(std::int32_t coset, const Word& w) const {
  for (char c : expand(w)) {
    if (coset < 0) return -1;
    coset = entry(static_cast<std::size_t>(coset), column_of(c));
  }
  return coset;
}

std::vector<std::int32_t> CosetTable::permutation(const Word& w) const {
  std::vector<std::size_t> cols;
  for (char c : expand(w)) cols.push_back(column_of(c));
  std::vector<std::int32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::int32_t c = static_cast<std::int32_t>(i);
    for (std::size_t col : cols) {
      if (c < 0) break;
      c = entry(static_cast<std::size_t>(c), col);
    }
    out[i] = c;
  }
  return out;
}

bool CosetTable::acts_trivially(const Word& w) const {
  auto perm = permutation(w);
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

std::string CosetTable::to_csv() const {
  std::ostringstream out;
  out << "coset";
  for (Generator g : generators_.generators()) out << ',' << g << ',' << g << "^-1";
  out << '\n';
  for (std::size_t r = 0; r < size(); ++r) {
    out << r + 1;
    for (std::size_t c = 0; c < columns(); ++c) {
      out << ',';
      if (entry(r, c) >= 0) out << entry(r, c) + 1;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct CapReached {};

class Enumerator {
 public:
  Enumerator(std::size_t ncols, std::size_t max_cosets) : ncols_(ncols), max_(max_cosets) {}

  std::int32_t entry(std::int32_t c, std::size_t x) const { return table_[idx(c, x)]; }
  bool live(std::int32_t c) const { return forward_[static_cast<std::size_t>(c)] == c; }
  std::int32_t allocated() const { return static_cast<std::int32_t>(forward_.size()); }

  std::int32_t new_coset() {
    if (forward_.size() >= max_) throw CapReached{};
    std::int32_t c = allocated();
    forward_.push_back(c);
    table_.resize(table_.size() + ncols_, -1);
    return c;
  }

  void define(std::int32_t c, std::size_t x) {
    std::int32_t d = new_coset();
    set(c, x, d);
  }

  // Scan w at coset `start`, defining cosets to complete the scan.
  void scan_and_fill(std::int32_t start, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::int32_t f = start, b = start;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[i]) >= 0) f = entry(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(w[j])) >= 0) b = entry(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(std::int32_t c) {
    for (std::size_t x = 0; x < ncols_ && live(c); ++x)
      if (entry(c, x) < 0) define(c, x);
  }

  std::vector<std::int32_t> compact() const {
    std::vector<std::int32_t> renumber(forward_.size(), -1);
    std::int32_t n = 0;
    for (std::int32_t c = 0; c < allocated(); ++c)
      if (live(c)) renumber[static_cast<std::size_t>(c)] = n++;
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(n) * ncols_);
    for (std::int32_t c = 0; c < allocated(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int32_t e = entry(c, x);
        out.push_back(e >= 0 ? renumber[static_cast<std::size_t>(e)] : -1);
      }
    }
    return out;
  }

 private:
  static std::size_t inv(std::size_t x) { return x ^ 1u; }
  std::size_t idx(std::int32_t c, std::size_t x) const { return static_cast<std::size_t>(c) * ncols_ + x; }

  void set(std::int32_t c, std::size_t x, std::int32_t d) {
    table_[idx(c, x)] = d;
    table_[idx(d, inv(x))] = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    forward_[static_cast<std::size_t>(l)] = k;
    queue_.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::int32_t g = queue_[qi];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = entry(g, x);
        if (d < 0) continue;
        table_[idx(d, inv(x))] = -1;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (entry(mu, x) >= 0)
          merge(nu, entry(mu, x));
        else if (entry(nu, inv(x)) >= 0)
          merge(mu, entry(nu, inv(x)));
        else
          set(mu, x, nu);
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
  std::vector<std::int32_t> queue_;
};

std::vector<std::size_t> columns_of(const Alphabet& alphabet, const Word& w) {
  std::vector<std::size_t> out;
  for (char c : expand(w)) {
    std::size_t i = alphabet.index_of(letter_generator(c));
    if (i == alphabet.size()) throw DomainError("word uses a generator outside the alphabet");
    out.push_back(2 * i + (letter_is_inverse(c) ? 1 : 0));
  }
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (max_cosets < 1) throw DomainError("max_cosets must be >= 1");
  const Alphabet& alphabet = pres.generators();
  std::vector<std::vector<std::size_t>> relators, gens;
  for (const auto& r : pres.relators()) relators.push_back(columns_of(alphabet, r));
  for (const auto& h : subgroup) gens.push_back(columns_of(alphabet, h));

  Enumerator e(2 * alphabet.size(), max_cosets);
  CosetTable::Status status = CosetTable::Status::Complete;
  try {
    e.new_coset();
    for (const auto& h : gens) e.scan_and_fill(0, h);
    for (std::int32_t c = 0; c < e.allocated(); ++c) {
      if (!e.live(c)) continue;
      for (const auto& r : relators) {
        e.scan_and_fill(c, r);
        if (!e.live(c)) break;
      }
      if (e.live(c)) e.fill_row(c);
    }
  } catch (const CapReached&) {
    status = CosetTable::Status::Capped;
  }
  return CosetTable(alphabet, e.compact(), status);
}

std::size_t PeripheralCheck::complete_runs() const {
  std::size_t n = 0;
  for (const auto& r : runs) n += r.complete ? 1 : 0;
  return n;
}

std::string to_string(PeripheralCheck::Verdict v) {
  switch (v) {
    case PeripheralCheck::Verdict::Consistent: return "consistent";
    case PeripheralCheck::Verdict::Inconsistent: return "inconsistent";
    case PeripheralCheck::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

PeripheralCheck check_peripheral_commutation(const KnotData& kd, std::size_t max_cosets) {
  const Word& mu = kd.peripheral.mu;
  const Word& s = kd.peripheral.s;
  const Word commutator = concat({invert(mu), invert(s), mu, s});

  PeripheralCheck out;
  out.exponent_sum_zero = true;
  for (Generator g : kd.presentation.generators().generators())
    if (exponent_sum(commutator, g) != 0) out.exponent_sum_zero = false;

  std::vector<std::pair<std::string, std::vector<Word>>> quotients{{"none", {}}};
  for (int i = 2; i <= 6; ++i)
    for (int j = 2; j <= 6; ++j)
      quotients.push_back({"a^" + std::to_string(i) + ", b^" + std::to_string(j),
                           {Word::generator('a', i), Word::generator('b', j)}});
  for (int n = 1; n <= 5; ++n)
    quotients.push_back({"surgery " + std::to_string(n) + "/1", {surgery_relator(kd, Slope(n))}});
  const std::vector<std::pair<std::string, std::vector<Word>>> subgroups{
      {"1", {}}, {"<a>", {Word::generator('a')}}, {"<b>", {Word::generator('b')}}, {"<mu>", {mu}}};

  const Word ab_commutator = concat({Word::generator('a', -1), Word::generator('b', -1), Word::generator('a'),
                                    Word::generator('b')});
  bool any_fail = false, any_nonabelian = false;
  for (const auto& [qname, extra] : quotients) {
    Presentation pres = kd.presentation;
    for (const auto& r : extra) pres = pres.with_relator(r);
    for (const auto& [hname, gens] : subgroups) {
      CosetTable table = todd_coxeter(pres, gens, max_cosets);
      CommutationRun run{qname, hname, table.complete(), table.size(), false, false};
      if (run.complete) {
        run.commutes = table.acts_trivially(commutator);
        run.nonabelian = !table.acts_trivially(ab_commutator);
        any_fail = any_fail || !run.commutes;
        any_nonabelian = any_nonabelian || run.nonabelian;
      }
      out.runs.push_back(run);
    }
  }
  if (any_fail || !out.exponent_sum_zero)
    out.verdict = PeripheralCheck::Verdict::Inconsistent;
  else if (any_nonabelian)
    out.verdict = PeripheralCheck::Verdict::Consistent;
  return out;
}

}  // namespace nlo
