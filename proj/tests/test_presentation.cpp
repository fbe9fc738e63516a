#include "doctest.h"
#include "generators.hpp"

#include "nlo/certifier.hpp"
#include "nlo/presentation.hpp"
#include "nlo/smith.hpp"
#include "nlo/twisted_torus.hpp"

#include <set>

using namespace nlo;

namespace {
Word w(std::string_view s) { return parse_word(s); }
}

TEST_CASE("presentation validation and labels") {
  Presentation free2(Alphabet{'a', 'b'}, {});
  CHECK(free2.relators().empty());
  CHECK_THROWS_AS(Presentation(Alphabet{'a', 'b'}, {w("a c")}), DomainError);
  CHECK_THROWS_AS(Presentation(Alphabet{'a'}, {}, {{"mu", w("b")}}), DomainError);
  Presentation p(Alphabet{'a', 'b'}, {w("a^3 b^-2")}, {{"mu", w("a^-1 b")}});
  CHECK(p.label("mu") == w("a^-1 b"));
  CHECK_THROWS_AS(p.label("s"), DomainError);
  CHECK(p.with_relator(w("a^-5 b")).relators().size() == 2);
  CHECK(p.with_label("s", w("a^3")).has_label("s"));
}

TEST_CASE("apply_relation: whole word and inverse step") {
  Relation rel{w("a^2 b^-1 a^2"), w("b^2 a b^2")};
  Word shifted = concat({w("b"), rel.lhs, w("a^-1")});
  CHECK(apply_relation(rel.lhs, rel, lhs_to_rhs_step(rel, 0)) == rel.rhs);

  // b a^2 b^-1 a^2 a^-1 reduces to b a^2 b^-1 a; the lhs no longer occurs literally at 1.
  CHECK_THROWS_AS(apply_relation(shifted, rel, lhs_to_rhs_step(rel, 1)), RewriteError);

  Word u = concat({w("b^3"), rel.lhs, w("b")});
  Word after = apply_relation(u, rel, lhs_to_rhs_step(rel, 3));
  CHECK(after == concat({w("b^3"), rel.rhs, w("b")}));
  CHECK(apply_relation(after, rel, rhs_to_lhs_step(rel, 3)) == u);

  CHECK_THROWS_AS(apply_relation(u, rel, lhs_to_rhs_step(rel, 0)), RewriteError);
  CHECK_THROWS_AS(apply_relation(u, rel, lhs_to_rhs_step(rel, 100)), RewriteError);
  RewriteStep bad = lhs_to_rhs_step(rel, 3);
  bad.rotation = 50;
  CHECK_THROWS_AS(apply_relation(u, rel, bad), RewriteError);
}

TEST_CASE("apply_relation reproduces the conjugated step for the l = p-2 minus family") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    KnotData kd = build(FamilyParams::make(4, k, FamilySign::Minus, 2, 1));
    Relation rel = Relation::from_relator(kd.presentation.relators()[0]);
    std::size_t lhs_len = static_cast<std::size_t>(kd.relation.lhs.length());
    RewriteStep step{0, RewriteStep::Direction::Forward, 1, lhs_len - 1, 0};
    Word got = apply_relation(kd.peripheral.s, rel, step);
    // a^-1 b^(2k-1) (b^(1-k) a^2)^(p-2) a at p = 4
    Word expected = concat({w("a^-1"), Word::generator('b', 2 * k - 1), power(concat(Word::generator('b', 1 - k), w("a^2")), 2),
                            w("a")});
    CHECK(got == expected);
  }
}

TEST_CASE("find_relation_applications") {
  Relation rel{w("a^3"), w("b^2")};
  auto zero = find_relation_applications(w("a^3 b"), rel, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].trace.empty());
  CHECK(zero[0].word == w("a^3 b"));

  auto one = find_relation_applications(w("a^3"), rel, 1);
  bool found = false;
  for (const auto& r : one) {
    if (r.word == w("b^2")) {
      found = true;
      CHECK(r.trace.size() == 1);
      CHECK(replay(w("a^3"), std::span<const Relation>(&rel, 1), r.trace) == w("b^2"));
    }
  }
  CHECK(found);

  // each result is distinct
  auto two = find_relation_applications(w("a^2 b"), rel, 2);
  std::set<Word> seen;
  for (const auto& r : two) CHECK(seen.insert(r.word).second);

  CHECK_THROWS_AS(find_relation_applications(w("a^5 b^5 a^5"), rel, 6, 50), SearchLimitError);

  std::vector<Relation> rels{rel};
  auto hit = search_relation_applications(w("a^3 b^-2 a"), rels, 2, [](const Word& x) { return x == w("a"); });
  REQUIRE(hit.has_value());
  CHECK(hit->trace.size() == 1);
  auto miss = search_relation_applications(w("a"), rels, 1, [](const Word& x) { return x == w("b"); });
  CHECK_FALSE(miss.has_value());
}

TEST_CASE("property: relation applications preserve the abelian class modulo the relator") {
  Relation rel{w("a^2 b^-1 a^2"), w("b^2 a b^2")};
  Word r = rel.relator();
  const Integer ra = exponent_sum(r, 'a'), rb = exponent_sum(r, 'b');
  for (int i = 0; i < 40; ++i) {
    Word u = concat({nlo::testing::random_word("ab", 3, 2), rel.lhs, nlo::testing::random_word("ab", 3, 2)});
    for (const auto& reach : find_relation_applications(u, rel, 1)) {
      Integer da = exponent_sum(reach.word, 'a') - exponent_sum(u, 'a');
      Integer db = exponent_sum(reach.word, 'b') - exponent_sum(u, 'b');
      // (da, db) = c * (ra, rb)
      CHECK(da * rb == db * ra);
      CHECK(da % ra == 0);
      CHECK(replay(u, std::span<const Relation>(&rel, 1), reach.trace) == reach.word);
    }
  }
}

TEST_CASE("generator changes") {
  GeneratorChange minus2 = xy_change_minus(2);
  Presentation pres(Alphabet{'a', 'b'}, {w("a^2 b^-1 a^2 b^-2 a^-1 b^-2")}, {{"mu", w("a^-1 b^2")}});
  Presentation xy = change_generators(pres, minus2);
  CHECK(xy.generators() == Alphabet{'x', 'y'});
  Substitution direct{{'a', w("y x y")}, {'b', w("y x")}};
  CHECK(xy.relators()[0] == substitute(pres.relators()[0], direct));
  CHECK(xy.label("mu") == w("x"));
  CHECK(h1(xy) == h1(pres));

  GeneratorChange id = GeneratorChange::identity(pres.generators());
  CHECK(change_generators(pres, id) == pres);

  CHECK_THROWS_AS(GeneratorChange(Alphabet{'a', 'b'}, Alphabet{'x', 'y'}, {{'a', w("x")}, {'b', w("y")}},
                                  {{'x', w("a")}, {'y', w("a b")}}),
                  DomainError);
  auto broken = GeneratorChange::unchecked(Alphabet{'a', 'b'}, Alphabet{'x', 'y'}, {{'a', w("x")}, {'b', w("y")}},
                                           {{'x', w("a")}, {'y', w("a b")}});
  CHECK_FALSE(broken.round_trips());
  CHECK_THROWS_AS(change_generators(pres, broken), DomainError);
}
