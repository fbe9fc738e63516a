#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nlo/integer.hpp"
#include "nlo/presentation.hpp"

namespace nlo {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// U * M * V == D, D diagonal with nonnegative entries d1 | d2 | ..., U and V unimodular.
struct SmithForm {
  IntMatrix D, U, V;
  std::size_t rank = 0;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row i holds the exponent sums of relator i.
IntMatrix abelianization_matrix(const Presentation& pres);

// Isomorphism type of a finitely generated abelian group: Z^free_rank plus
// the cyclic factors Z/t for t in torsion (all t > 1, t1 | t2 | ...).
struct AbelianGroup {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  // nullopt when infinite.
  std::optional<Integer> order() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup h1(const Presentation& pres);

// The abelianization of a presentation with explicit coordinates: the class
// of a word is its exponent-sum row vector times V, reduced modulo D.
class Abelianization {
 public:
  explicit Abelianization(const Presentation& pres);

  const AbelianGroup& group() const { return group_; }
  const SmithForm& smith() const { return smith_; }

  // Coordinates: free part first, then one entry per torsion factor (reduced
  // into [0, t)). Unit factors carry no information and are dropped.
  std::vector<Integer> class_of(const Word& w) const;
  // For H1 = Z: the single free coordinate.
  Integer free_class(const Word& w) const;

 private:
  Alphabet generators_;
  SmithForm smith_;
  AbelianGroup group_;
  std::vector<std::size_t> free_columns_;
  std::vector<std::pair<std::size_t, Integer>> torsion_columns_;
};

}  // namespace nlo
