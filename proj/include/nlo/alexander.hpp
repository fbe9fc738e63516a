#pragma once

#include <cstdint>

#include "nlo/laurent.hpp"
#include "nlo/presentation.hpp"
#include "nlo/twisted_torus.hpp"

namespace nlo {

// Alexander polynomial of a two-generator one-relator presentation with
// H1 = Z, from the Fox Jacobian. The abelian images of the generators come
// from the Smith normal form; if `meridian` is given, t is oriented so that
// it maps to t (and it must generate H1). Result is unit-normalized.
LaurentPolynomial alexander_polynomial(const Presentation& pres, const Word* meridian = nullptr);
LaurentPolynomial alexander_polynomial(const KnotData& kd);

// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized.
LaurentPolynomial torus_alexander(std::int64_t p, std::int64_t q);

struct ThresholdReport {
  LaurentPolynomial alexander;
  Integer genus;
  Slope threshold;  // 2g - 1
  Integer framing;  // v, for comparison
};

// For L-space knots r-surgery is an L-space exactly when r >= 2g - 1.
ThresholdReport lspace_surgery_threshold(const KnotData& kd);

}  // namespace nlo
