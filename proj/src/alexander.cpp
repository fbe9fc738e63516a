#include "nlo/alexander.hpp"

#include "nlo/fox.hpp"
#include "nlo/smith.hpp"

namespace nlo {

namespace {

LaurentPolynomial t_power_minus_one(std::int64_t e) {
  return LaurentPolynomial::monomial(1, e) - LaurentPolynomial(1);
}

}  // namespace

LaurentPolynomial alexander_polynomial(const Presentation& pres, const Word* meridian) {
  if (pres.generators().size() != 2 || pres.relators().size() != 1)
    throw DomainError("Alexander polynomial needs a two-generator one-relator presentation");
  Abelianization ab(pres);
  if (ab.group().free_rank != 1 || !ab.group().torsion.empty())
    throw DomainError("H1 of the presentation is not infinite cyclic");

  const Generator g0 = pres.generators().generators()[0];
  const Generator g1 = pres.generators().generators()[1];
  Integer c0 = ab.free_class(Word::generator(g0));
  Integer c1 = ab.free_class(Word::generator(g1));
  if (meridian) {
    Integer cm = ab.free_class(*meridian);
    if (cm != 1 && cm != -1) throw DomainError("meridian does not generate H1 (class " + cm.str() + ")");
    if (cm < 0) {
      c0 = -c0;
      c1 = -c1;
    }
  }
  const std::map<Generator, std::int64_t> images{{g0, require_int64(c0, "abelian class")},
                                                  {g1, require_int64(c1, "abelian class")}};
  const Word& relator = pres.relators()[0];
  const LaurentPolynomial t_minus_one = t_power_minus_one(1);
  // D_g0(R) (t^c0 - 1) + D_g1(R) (t^c1 - 1) = 0 after abelianizing, and
  // gcd(c0, c1) = 1, so either partial determines the polynomial.
  LaurentPolynomial numerator, denominator;
  if (c1 != 0) {
    numerator = abelianize(fox_derivative(relator, g0), images) * t_minus_one;
    denominator = t_power_minus_one(images.at(g1));
  } else {
    numerator = abelianize(fox_derivative(relator, g1), images) * t_minus_one;
    denominator = t_power_minus_one(images.at(g0));
  }
  return divide_exact(numerator, denominator).normalized();
}

LaurentPolynomial alexander_polynomial(const KnotData& kd) {
  return alexander_polynomial(kd.presentation, &kd.peripheral.mu);
}

LaurentPolynomial torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw DomainError("torus knot parameters must be >= 2");
  if (gcd(Integer(p), Integer(q)) != 1) throw DomainError("torus knot parameters must be coprime");
  LaurentPolynomial num = t_power_minus_one(p * q) * t_power_minus_one(1);
  LaurentPolynomial den = t_power_minus_one(p) * t_power_minus_one(q);
  return divide_exact(num, den).normalized();
}

ThresholdReport lspace_surgery_threshold(const KnotData& kd) {
  if (!is_lspace_knot(kd.params).is_lspace)
    throw DomainError("not an L-space twisted torus knot: " + kd.params.describe());
  LaurentPolynomial delta = alexander_polynomial(kd);
  const std::int64_t breadth = delta.span();
  if (breadth % 2 != 0)
    throw DomainError("Alexander polynomial has odd breadth " + std::to_string(breadth));
  Integer genus = breadth / 2;
  return {delta, genus, Slope(2 * genus - 1), kd.peripheral.v};
}

}  // namespace nlo
