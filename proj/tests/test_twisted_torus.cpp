#include "doctest.h"
#include "generators.hpp"

#include "nlo/smith.hpp"
#include "nlo/twisted_torus.hpp"

using namespace nlo;

namespace {
Word w(std::string_view s) { return parse_word(s); }
FamilyParams minus(std::int64_t p, std::int64_t k, std::int64_t l, std::int64_t m) {
  return FamilyParams::make(p, k, FamilySign::Minus, l, m);
}
FamilyParams plus(std::int64_t p, std::int64_t k, std::int64_t l, std::int64_t m) {
  return FamilyParams::make(p, k, FamilySign::Plus, l, m);
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FamilyParams::make(1, 1, FamilySign::Plus, 2, 1), DomainError);
  CHECK_THROWS_AS(FamilyParams::make(3, 0, FamilySign::Plus, 2, 1), DomainError);
  CHECK_THROWS_AS(FamilyParams::make(2, 1, FamilySign::Minus, 2, 1, true), DomainError);  // q = 1
  CHECK_THROWS_AS(minus(3, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(minus(3, 1, 4, 1), DomainError);
  CHECK_THROWS_AS(minus(3, 1, 2, -1), DomainError);
  CHECK_THROWS_AS(minus(3, 1, 3, 1), DomainError);
  CHECK(FamilyParams::make(3, 1, FamilySign::Minus, 3, 1, true).unverified_range());
  try {
    minus(3, 1, 5, 1);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("l") != std::string::npos);
  }
}

TEST_CASE("minus family (3,2,2,1)") {
  KnotData kd = build(minus(3, 2, 2, 1));
  CHECK(kd.relation.lhs == w("a^2 b^-1 a^2"));
  CHECK(kd.relation.rhs == w("b^2 a b^2"));
  CHECK(kd.presentation.relators()[0] == w("a^2 b^-1 a^2 b^-2 a^-1 b^-2"));
  CHECK(kd.peripheral.mu == w("a^-1 b^2"));
  CHECK(kd.peripheral.s == w("a b^-1 a^2 b^-1 a^2"));
  CHECK(kd.peripheral.v == 19);
  CHECK(kd.presentation.label("mu") == kd.peripheral.mu);
  CHECK(kd.presentation.label("s") == kd.peripheral.s);
  CHECK(kd.flags.empty());
}

TEST_CASE("untwisted degeneration") {
  for (std::int64_t p = 2; p <= 6; ++p)
    for (std::int64_t k = 1; k <= 3; ++k)
      for (std::int64_t l = 2; l <= p - 1; ++l) {
        for (auto sign : {FamilySign::Minus, FamilySign::Plus}) {
          if (p * k + static_cast<int>(sign) < 2) continue;
          KnotData kd = build(FamilyParams::make(p, k, sign, l, 0));
          Integer q = kd.params.q();
          CHECK(kd.presentation.relators()[0] == concat(Word::generator('a', p), Word::generator('b', -q)));
          CHECK(kd.peripheral.v == p * q);
          CHECK(kd.flags.size() == 1);
          if (sign == FamilySign::Minus) CHECK(kd.peripheral.s == Word::generator('a', p));
        }
      }
  KnotData trefoil = build(minus(3, 1, 2, 0));
  CHECK(trefoil.relation.relator() == w("a^3 b^-2"));
  CHECK(trefoil.peripheral.mu == w("a^-1 b"));
  CHECK(trefoil.peripheral.s == w("a^3"));
  CHECK(trefoil.peripheral.v == 6);
}

TEST_CASE("plus family (3,1,2,1)") {
  KnotData kd = build(plus(3, 1, 2, 1));
  CHECK(kd.relation.lhs == w("a b^2 a"));
  CHECK(kd.relation.rhs == w("b^3 a^-1 b^3"));
  CHECK(kd.peripheral.mu == w("b^-1 a"));
  CHECK(kd.peripheral.s == w("b^4 a"));
  CHECK(kd.peripheral.v == 16);
  CHECK(abelianization_matrix(kd.presentation) == IntMatrix{{3, -4}});

  KnotData k5 = build(plus(5, 1, 4, 1));
  CHECK(exponent_sum(k5.presentation.relators()[0], 'a') == 5);
  CHECK(exponent_sum(k5.presentation.relators()[0], 'b') == -6);
}

TEST_CASE("L-space classification") {
  auto c = is_lspace_knot(5, 4, 3);
  CHECK(c.is_lspace);
  CHECK(c.matched == LSpaceCase::PMinus1);
  CHECK(is_lspace_knot(5, 3, 1).matched == LSpaceCase::PMinus2M1);
  CHECK_FALSE(is_lspace_knot(5, 3, 2).is_lspace);
  CHECK(is_lspace_knot(6, 2, 1).matched == LSpaceCase::Two_M1);
  CHECK(is_lspace_knot(4, 2, 1).matched == LSpaceCase::PMinus2M1);
  CHECK(is_lspace_knot(7, 3, 1).matched == LSpaceCase::None);
}

TEST_CASE("slopes") {
  Slope r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Slope::parse("19") == Slope(19, 1));
  CHECK(Slope::parse("38/2").str() == "19/1");
  CHECK(Slope::parse("-20/1") == Slope(-20));
  CHECK(Slope(37, 2) < Slope(19));
  CHECK_THROWS(Slope(1, 0));
  CHECK_THROWS(Slope::parse("1/"));
  CHECK_THROWS(Slope::parse("x"));
  CHECK_THROWS(Slope::parse(" 1/2"));
}

TEST_CASE("surgery relators") {
  KnotData trefoil = build(minus(3, 1, 2, 0));
  CHECK(surgery_relator(trefoil, Slope(1)) == concat(power(trefoil.peripheral.mu, -5), w("a^3")));
  CHECK(surgery_relator(trefoil, Slope(6)) == trefoil.peripheral.s);
  KnotData t35 = build(minus(3, 2, 2, 1));
  CHECK(surgery_relator(t35, Slope(19)) == w("a b^-1 a^2 b^-1 a^2"));
  Presentation sp = surgery_presentation(t35, Slope(19));
  CHECK(sp.relators().size() == 2);
  CHECK(sp.label("mu") == t35.peripheral.mu);
}

TEST_CASE("property: family invariants over a grid") {
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t k = 1; k <= 4; ++k)
      for (std::int64_t l = 2; l <= p; ++l)
        for (std::int64_t m = 0; m <= 3; ++m)
          for (auto sign : {FamilySign::Minus, FamilySign::Plus}) {
            if (p * k + static_cast<int>(sign) < 2) continue;
            FamilyParams fp = FamilyParams::make(p, k, sign, l, m, true);
            KnotData kd = build(fp);
            const Word& rel = kd.presentation.relators()[0];
            CHECK(exponent_sum(rel, 'a') == p);
            CHECK(exponent_sum(rel, 'b') == -fp.q());
            CHECK(kd.peripheral.v == p * fp.q() + l * l * m);
            Abelianization ab(kd.presentation);
            REQUIRE(ab.group().free_rank == 1);
            CHECK(ab.group().torsion.empty());
            Integer mu = ab.free_class(kd.peripheral.mu);
            CHECK(abs(mu) == 1);
            CHECK(ab.free_class(kd.peripheral.s) == kd.peripheral.v * mu);
            CHECK(build(fp).presentation == kd.presentation);
          }
}

TEST_CASE("property: surgery homology order") {
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = nlo::testing::uniform(3, 6), k = nlo::testing::uniform(1, 3), m = nlo::testing::uniform(0, 3);
    auto sign = nlo::testing::uniform(0, 1) ? FamilySign::Plus : FamilySign::Minus;
    KnotData kd = build(FamilyParams::make(p, k, sign, p - 1, m));
    std::int64_t a = nlo::testing::uniform(-40, 40), b = nlo::testing::uniform(1, 6);
    Slope r(a, b);
    AbelianGroup g = h1(surgery_presentation(kd, r));
    if (r.numerator() == 0) {
      CHECK(g.free_rank == 1);
    } else {
      REQUIRE(g.order().has_value());
      CHECK(*g.order() == abs(r.numerator()));
    }
  }
}
