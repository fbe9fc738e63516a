#pragma once

// Non-left-orderability certificates for surgeries on the L-space twisted
// torus knots with l = p-1, or l = p-2 and m = 1.
//
// A certificate exhibits generators x, y of the knot group with x a meridian
// and the surface framing s equal (in the group) to a positive word in x, y
// containing x. Together with the real-line argument proved for these
// generators, this makes every surgery quotient at slope r >= v = pq + l^2 m,
// r > 0, non-left-orderable.

#include <stdexcept>
#include <string>
#include <vector>

#include "nlo/presentation.hpp"
#include "nlo/twisted_torus.hpp"

namespace nlo {

enum class CertificateCase {
  MinusPMinus1,    // sign -1, l = p-1
  MinusPMinus2M1,  // sign -1, l = p-2, m = 1
  PlusPMinus1,     // sign +1, l = p-1
  PlusPMinus2M1,   // sign +1, l = p-2, m = 1
};

std::string to_string(CertificateCase c);
CertificateCase certificate_case_from_string(const std::string& s);

inline constexpr int kCertificateSchemaVersion = 1;

struct HypothesisRecord {
  bool x_is_meridian = false;
  bool s_positive = false;
  bool s_contains_x = false;
  friend bool operator==(const HypothesisRecord&, const HypothesisRecord&) = default;
};

struct Certificate {
  int schema_version = kCertificateSchemaVersion;
  FamilyParams params;
  CertificateCase construction;
  GeneratorChange change;  // {a, b} <-> {x, y}
  RewriteTrace trace;      // replayed on s over {a, b} with the knot relator
  Word positive_s;         // over {x, y}
  Integer v;
  HypothesisRecord hypotheses;

  std::string bound() const { return "r >= " + v.str(); }
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator changes: forward maps a, b into {x, y}.
//   minus: a -> (yx)^(k-1) y, b -> yx;   x -> a^-1 b^k, y -> b^(1-k) a
//   plus:  a -> (xy)^k x,     b -> xy;   x -> b^-k a,   y -> a^-1 b^(k+1)
GeneratorChange xy_change_minus(std::int64_t k);
GeneratorChange xy_change_plus(std::int64_t k);
GeneratorChange xy_change(FamilySign sign, std::int64_t k);

// Which construction applies. Throws CertificationError naming the nearest
// case and the failing condition.
CertificateCase classify_for_certificate(const FamilyParams& params);

// The positive word in x, y that the certificate for `params` must carry.
Word closed_form(CertificateCase c, const FamilyParams& params);
// s pushed through the generator change with no relation applied, in closed
// form. Equal to closed_form() except for the minus l = p-1 case at k = 1,
// where this word has no x and one relation application is needed.
Word substituted_framing_form(CertificateCase c, const FamilyParams& params);

Certificate certify(const KnotData& kd);

struct Verdict {
  enum class Clause { RoundTrip = 1, MeridianIsX = 2, TraceReplay = 3, Positivity = 4, Framing = 5 };
  struct Failure {
    Clause clause;
    std::string message;
  };
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  bool failed(Clause c) const;
  std::string summary() const;
};

std::string to_string(Verdict::Clause c);

// Replays and checks, never searches.
Verdict verify_certificate(const KnotData& kd, const Certificate& cert);

// Slopes p'/q' with p', q' > 0 and p'/q' >= v.
struct SlopeRange {
  Integer v;
  bool contains(const Slope& r) const;
};

SlopeRange slope_range(const Certificate& cert);

}  // namespace nlo
