#include "doctest.h"
#include "generators.hpp"

#include "nlo/alexander.hpp"
#include "nlo/fox.hpp"
#include "nlo/twisted_torus.hpp"

using namespace nlo;
using L = LaurentPolynomial;

namespace {
Word w(std::string_view s) { return parse_word(s); }

GroupRingElement times_right(const GroupRingElement& x, const Word& g) {
  GroupRingElement out;
  for (const auto& [u, c] : x.terms()) out.add(concat(u, g), c);
  return out;
}

// Both monomials and the (t^n - 1) factors come from the meridian, not SNF.
L alexander_from_b(const KnotData& kd) {
  const Word& rel = kd.presentation.relators()[0];
  std::int64_t p = kd.params.p();
  std::int64_t q = require_int64(kd.params.q(), "q");
  // Under a -> t^q, b -> t^p the meridian maps to t (q = pk -+ 1).
  std::map<Generator, std::int64_t> images{{'a', q}, {'b', p}};
  L db = abelianize(fox_derivative(rel, 'b'), images);
  L num = db * (L::monomial(1, 1) - L(1));
  L den = L::monomial(1, q) - L(1);
  return divide_exact(num, den).normalized();
}
}  // namespace

TEST_CASE("fox derivative examples") {
  CHECK(fox_derivative(w("a^3"), 'a') == GroupRingElement::of(Word{}) + GroupRingElement::of(w("a")) +
                                              GroupRingElement::of(w("a^2")));
  CHECK(fox_derivative(w("b"), 'a').is_zero());
  CHECK(fox_derivative(w("a^3 b^-2"), 'b') == GroupRingElement::of(w("a^3 b^-1"), -1) + GroupRingElement::of(w("a^3 b^-2"), -1));
  CHECK(fox_derivative(w("a^-1"), 'a') == GroupRingElement::of(w("a^-1"), -1));
  CHECK(fox_derivative(w("a"), 'a') == GroupRingElement::of(Word{}));
  CHECK(format_group_ring(fox_derivative(w("a^2"), 'a')) == "1*[] + 1*[a]");
}

TEST_CASE("property: fox product rule and fundamental formula on random pairs") {
  for (int i = 0; i < 1000; ++i) {
    Word u = nlo::testing::random_word("ab", 6, 3), v = nlo::testing::random_word("ab", 6, 3);
    for (Generator g : {'a', 'b'}) {
      CHECK(fox_derivative(concat(u, v), g) == fox_derivative(u, g) + u * fox_derivative(v, g));
    }
    // sum_g D_g(u) (g - 1) = u - 1
    GroupRingElement lhs;
    for (Generator g : {'a', 'b'}) {
      GroupRingElement d = fox_derivative(u, g);
      lhs += times_right(d, Word::generator(g));
      lhs += -d;
    }
    CHECK(lhs == GroupRingElement::of(u) + GroupRingElement::of(Word{}, -1));
  }
}

TEST_CASE("abelianize") {
  std::map<Generator, std::int64_t> images{{'a', 3}, {'b', 2}};
  CHECK(abelianize(fox_derivative(w("a^3 b^-2"), 'a'), images) == L::from_coefficients({1, 0, 0, 1, 0, 0, 1}));
  CHECK_THROWS(abelianize(GroupRingElement::of(w("c")), images));
}

TEST_CASE("torus knot closed form") {
  CHECK(torus_alexander(2, 3) == L::from_coefficients({1, -1, 1}));
  CHECK(torus_alexander(2, 5) == L::from_coefficients({1, -1, 1, -1, 1}));
  CHECK(torus_alexander(3, 4) == parse_polynomial("1 - t + t^3 - t^5 + t^6"));
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t q = 2; q <= 11; ++q) {
      if (gcd(p, q) != 1) {
        CHECK_THROWS(torus_alexander(p, q));
        continue;
      }
      L d = torus_alexander(p, q);
      CHECK(d == torus_alexander(q, p));
      CHECK(d.span() == (p - 1) * (q - 1));
      // Evaluation oracle: D(t) (t^p - 1)(t^q - 1) = (t^pq - 1)(t - 1) at several integers.
      for (Integer t : {Integer(2), Integer(3), Integer(-2), Integer(10)}) {
        Integer lhs = d.evaluate(t) * (pow(t, static_cast<unsigned>(p)) - 1) * (pow(t, static_cast<unsigned>(q)) - 1);
        Integer rhs = (pow(t, static_cast<unsigned>(p * q)) - 1) * (t - 1);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("alexander polynomials of family knots") {
  KnotData trefoil = build(FamilyParams::make(3, 1, FamilySign::Minus, 2, 0));
  CHECK(alexander_polynomial(trefoil) == L::from_coefficients({1, -1, 1}));
  CHECK(alexander_polynomial(build(FamilyParams::make(5, 1, FamilySign::Minus, 3, 0))) == torus_alexander(5, 4));

  ThresholdReport tr = lspace_surgery_threshold(trefoil);
  CHECK(tr.genus == 1);
  CHECK(tr.threshold == Slope(1));
  CHECK(tr.framing == 6);

  ThresholdReport t35 = lspace_surgery_threshold(build(FamilyParams::make(3, 2, FamilySign::Minus, 2, 1)));
  CHECK(t35.threshold <= Slope(19));

  CHECK_THROWS(lspace_surgery_threshold(build(FamilyParams::make(5, 1, FamilySign::Minus, 3, 2))));
  CHECK_THROWS(alexander_polynomial(Presentation(Alphabet{'a', 'b'}, {w("a^2"), w("b")})));
}

TEST_CASE("property: alexander polynomials over the grid") {
  for (std::int64_t p = 3; p <= 7; ++p)
    for (std::int64_t k = 1; k <= 4; ++k)
      for (auto sign : {FamilySign::Minus, FamilySign::Plus})
        for (std::int64_t m = 0; m <= 3; ++m)
          for (std::int64_t l : {p - 1, p - 2}) {
            if (l < 2 || (l == p - 2 && m > 1)) continue;
            KnotData kd = build(FamilyParams::make(p, k, sign, l, m));
            CAPTURE(kd.params.describe());
            L d = alexander_polynomial(kd);
            CHECK(d == d.reflected().normalized());
            CHECK(abs(d.at_one()) == 1);
            CHECK(d == alexander_from_b(kd));
            if (m == 0) CHECK(d == torus_alexander(p, require_int64(kd.params.q(), "q")));
            // L-space knots: nonzero coefficients are +-1 and alternate in sign.
            int expected = 1;
            for (const auto& [e, c] : d.terms()) {
              CHECK(c == expected);
              expected = -expected;
            }
            if (!is_lspace_knot(kd.params).is_lspace) continue;
            ThresholdReport tr = lspace_surgery_threshold(kd);
            CHECK(tr.threshold <= Slope(kd.peripheral.v));
            CHECK(2 * tr.genus == d.span());
          }
}
