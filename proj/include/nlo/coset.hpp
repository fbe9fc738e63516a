#pragma once

// Todd-Coxeter coset enumeration (HLT strategy: cosets are processed in
// order of definition; each relator is scanned and filled at each live
// coset, then the coset's row is completed; coincidences are merged with a
// queue and a forwarding array). Row 0 is the subgroup's coset
// (row 1 in the 1-based CSV export).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nlo/presentation.hpp"
#include "nlo/twisted_torus.hpp"

namespace nlo {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

class CosetTable {
 public:
  enum class Status { Complete, Capped };

  CosetTable(Alphabet generators, std::vector<std::int32_t> entries, Status status);

  const Alphabet& generators() const { return generators_; }
  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  // Number of rows; the subgroup index when complete.
  std::size_t size() const { return entries_.size() / columns(); }
  // Column 2i is generator i, column 2i+1 its inverse.
  std::size_t columns() const { return 2 * generators_.size(); }
  // -1 when undefined.
  std::int32_t entry(std::size_t coset, std::size_t column) const {
    return entries_[coset * columns() + column];
  }

  // Image of a coset under right multiplication by w; -1 if undefined.
  std::int32_t act(std::int32_t coset, const Word& w) const;
  // act() for every coset.
  std::vector<std::int32_t> permutation(const Word& w) const;
  bool acts_trivially(const Word& w) const;

  std::string to_csv() const;

 private:
  std::size_t column_of(char letter) const;
  Alphabet generators_;
  std::vector<std::int32_t> entries_;
  Status status_;
};

// max_cosets bounds the number of rows the enumeration may define.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

struct CommutationRun {
  std::string quotient;  // extra relators added to the knot group
  std::string subgroup;
  bool complete = false;
  std::size_t index = 0;
  bool commutes = false;  // meaningful only when complete
  // a and b act non-commutingly; abelian actions cannot separate anything.
  bool nonabelian = false;
};

struct PeripheralCheck {
  enum class Verdict { Consistent, Inconsistent, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  bool exponent_sum_zero = false;
  std::vector<CommutationRun> runs;
  std::size_t complete_runs() const;
};

std::string to_string(PeripheralCheck::Verdict v);

// Checks that [mu, s] acts trivially in every completed enumeration of a
// fixed battery: quotients {none, a^i and b^j for 2 <= i, j <= 6, slope n/1
// surgery for n = 1..5} crossed with subgroups {1, <a>, <b>, <mu>}.
// Consistent needs at least one completed non-abelian action and no failure.
// A consistency check only: finitely many finite actions cannot prove the
// commutator trivial.
PeripheralCheck check_peripheral_commutation(const KnotData& kd, std::size_t max_cosets);

}  // namespace nlo
