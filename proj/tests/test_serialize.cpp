#include "doctest.h"

#include "nlo/certifier.hpp"
#include "nlo/serialize.hpp"

using namespace nlo;

namespace {
FamilyParams fam(std::int64_t p, std::int64_t k, int sign, std::int64_t l, std::int64_t m) {
  return FamilyParams::make(p, k, sign < 0 ? FamilySign::Minus : FamilySign::Plus, l, m);
}
}  // namespace

TEST_CASE("integers") {
  CHECK(integer_to_json(Integer(-7)) == Json(-7));
  Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(Json("-12")) == -12);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), DomainError);
  CHECK_THROWS(integer_from_json(Json("1x")));
}

TEST_CASE("documents") {
  Json doc = document(Json{{"schema_version", kSchemaVersion}, {"type", "thing"}});
  CHECK(doc.at("header").at("tool") == "nlo");
  CHECK(doc.at("header").contains("version"));
  CHECK(open_document(doc, "thing").at("type") == "thing");
  CHECK_THROWS_AS(open_document(doc, "other"), DomainError);
  Json future = doc;
  future["content"]["schema_version"] = 99;
  CHECK_THROWS_AS(open_document(future, "thing"), DomainError);
  Json bare = Json{{"type", "thing"}};
  CHECK_THROWS_AS(open_document(bare, "thing"), DomainError);
  CHECK(dump_document(doc).back() == '\n');
}

TEST_CASE("presentation round trip") {
  Presentation p(Alphabet{'a', 'b'}, {parse_word("a^3 b^-2")}, {{"mu", parse_word("a^-1 b")}});
  Json j = presentation_to_json(p);
  CHECK(j.at("relators")[0] == "a^3 b^-2");
  CHECK(presentation_from_json(j) == p);
  CHECK(presentation_from_json(document(j)) == p);
  Json bad = j;
  bad["relators"][0] = "a^3 c";
  CHECK_THROWS(presentation_from_json(bad));
  bad = j;
  bad["generators"] = Json::array({"ab"});
  CHECK_THROWS_AS(presentation_from_json(bad), DomainError);
}

TEST_CASE("knot data and certificate round trips") {
  for (auto fp : {fam(3, 2, -1, 2, 1), fam(3, 1, 1, 2, 1), fam(4, 1, -1, 2, 1), fam(5, 3, 1, 3, 1), fam(3, 1, -1, 2, 0)}) {
    KnotData kd = build(fp);
    Json kj = knot_data_to_json(kd);
    KnotData kd2 = knot_data_from_json(document(kj));
    CHECK(kd2.params == kd.params);
    CHECK(kd2.presentation == kd.presentation);
    CHECK(kd2.relation.lhs == kd.relation.lhs);
    CHECK(kd2.peripheral.s == kd.peripheral.s);
    CHECK(kd2.peripheral.v == kd.peripheral.v);
    CHECK(kd2.flags == kd.flags);
    CHECK(knot_data_to_json(kd2) == kj);
    CHECK(dump_document(document(knot_data_to_json(build(fp)))) == dump_document(document(kj)));

    Certificate c = certify(kd);
    Json cj = certificate_to_json(c);
    Certificate c2 = certificate_from_json(document(cj));
    CHECK(certificate_to_json(c2) == cj);
    CHECK(c2.positive_s == c.positive_s);
    CHECK(c2.trace == c.trace);
    CHECK(c2.change == c.change);
    CHECK(verify_certificate(kd2, c2).passed());
  }
}

TEST_CASE("certificate schema") {
  KnotData kd = build(fam(4, 2, -1, 2, 1));
  Json cj = certificate_to_json(certify(kd));
  CHECK(cj.at("type") == "certificate");
  CHECK(cj.at("schema_version") == kCertificateSchemaVersion);
  CHECK(cj.at("bound") == "r >= 32");
  CHECK(cj.at("v") == 32);
  REQUIRE(cj.at("trace").size() == 1);
  CHECK(cj.at("trace")[0].at("direction") == "forward");
  CHECK(cj.at("hypotheses").at("s_contains_x") == true);

  Json tampered = cj;
  tampered["v"] = 33;
  CHECK(verify_certificate(kd, certificate_from_json(tampered)).failed(Verdict::Clause::Framing));
  tampered = cj;
  tampered["generator_change"]["backward"]["x"] = "a^-1 b^3";
  CHECK(verify_certificate(kd, certificate_from_json(tampered)).failed(Verdict::Clause::RoundTrip));
  tampered = cj;
  tampered["trace"][0]["direction"] = "sideways";
  CHECK_THROWS_AS(certificate_from_json(tampered), DomainError);
  tampered = cj;
  tampered["schema_version"] = 2;
  CHECK_THROWS_AS(certificate_from_json(tampered), DomainError);
}
