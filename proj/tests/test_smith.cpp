#include "doctest.h"
#include "generators.hpp"

#include "nlo/smith.hpp"
#include "nlo/twisted_torus.hpp"

using namespace nlo;

namespace {

// Fraction-free Gaussian elimination; exact integer determinant.
Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix random_matrix(std::size_t r, std::size_t c, std::int64_t bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = nlo::testing::uniform(-bound, bound);
  return m;
}

void check_smith(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  CHECK(f.U * m * f.V == f.D);
  CHECK(abs(bareiss_det(f.U)) == 1);
  CHECK(abs(bareiss_det(f.V)) == 1);
  auto d = f.diagonal();
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j) CHECK(f.D(i, j) == 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (d[i] == 0) CHECK((i + 1 == d.size() || d[i + 1] == 0));
  }
  std::size_t nonzero = 0;
  for (const auto& x : d) nonzero += x != 0;
  CHECK(f.rank == nonzero);
  if (m.rows() == m.cols() && m.rows() > 0) {
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    CHECK(prod == abs(bareiss_det(m)));
  }
}

}  // namespace

TEST_CASE("bareiss oracle") {
  CHECK(bareiss_det(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(bareiss_det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

TEST_CASE("smith normal form examples") {
  check_smith(IntMatrix{{3, -5}});
  check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm f = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(f.diagonal() == std::vector<Integer>{2, 6, 12});
  check_smith(IntMatrix(0, 2));
  check_smith(IntMatrix{{0, 0}, {0, 0}});
}

TEST_CASE("property: smith normal form on random matrices") {
  for (int i = 0; i < 200; ++i) {
    auto r = static_cast<std::size_t>(nlo::testing::uniform(1, 4));
    auto c = static_cast<std::size_t>(nlo::testing::uniform(1, 4));
    check_smith(random_matrix(r, c, 9));
  }
  for (int i = 0; i < 50; ++i) check_smith(random_matrix(3, 3, 1000000));
}

TEST_CASE("homology") {
  Presentation knot(Alphabet{'a', 'b'}, {parse_word("a^2 b^-1 a^2 b^-2 a^-1 b^-2")});
  CHECK(abelianization_matrix(knot) == IntMatrix{{3, -5}});
  AbelianGroup g = h1(knot);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion.empty());
  CHECK_FALSE(g.order().has_value());

  AbelianGroup free2 = h1(Presentation(Alphabet{'a', 'b'}, {}));
  CHECK(free2.free_rank == 2);

  Presentation trefoil1(Alphabet{'a', 'b'}, {parse_word("a^3 b^-2"), concat(power(parse_word("a^-1 b"), -5), parse_word("a^3"))});
  CHECK(h1(trefoil1).order() == Integer(1));

  Presentation z6(Alphabet{'a'}, {parse_word("a^6")});
  CHECK(h1(z6).torsion == std::vector<Integer>{6});
  Presentation z2z4(Alphabet{'a', 'b'}, {parse_word("a^2"), parse_word("b^4")});
  CHECK(h1(z2z4).torsion == std::vector<Integer>{2, 4});
  CHECK(h1(z2z4).order() == Integer(8));
}

TEST_CASE("abelianization coordinates") {
  KnotData kd = build(FamilyParams::make(3, 2, FamilySign::Minus, 2, 1));
  Abelianization ab(kd.presentation);
  Integer mu = ab.free_class(kd.peripheral.mu);
  CHECK(abs(mu) == 1);
  CHECK(ab.free_class(kd.peripheral.s) == 19 * mu);
  CHECK(ab.free_class(kd.presentation.relators()[0]) == 0);

  Abelianization tor(Presentation(Alphabet{'a', 'b'}, {parse_word("a^2"), parse_word("b^4")}));
  auto cls = tor.class_of(parse_word("a b^5"));
  REQUIRE(cls.size() == 2);
  for (const auto& x : cls) CHECK(x >= 0);
  CHECK(tor.class_of(parse_word("a^2 b^4")) == std::vector<Integer>{0, 0});
}
