#include "nlo/serialize.hpp"

#ifndef NLO_VERSION
#define NLO_VERSION "0.0.0"
#endif

namespace nlo {

namespace {

void check_schema(const Json& content) {
  if (!content.contains("schema_version")) throw DomainError("document has no schema_version");
  const auto& v = content.at("schema_version");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    throw DomainError("unsupported schema version " + v.dump() + " (this tool reads version " +
                      std::to_string(kSchemaVersion) + ")");
}

Json alphabet_to_json(const Alphabet& a) {
  Json out = Json::array();
  for (Generator g : a.generators()) out.push_back(std::string(1, g));
  return out;
}

Alphabet alphabet_from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& g : j) {
    auto s = g.get<std::string>();
    if (s.size() != 1) throw DomainError("generator names are single letters, got '" + s + "'");
    gens.push_back(s[0]);
  }
  return Alphabet(std::move(gens));
}

Json substitution_to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [g, w] : s) out[std::string(1, g)] = format_word(w);
  return out;
}

Substitution substitution_from_json(const Json& j) {
  Substitution out;
  for (const auto& [k, v] : j.items()) {
    if (k.size() != 1) throw DomainError("map keys are single generators, got '" + k + "'");
    out[k[0]] = parse_word(v.get<std::string>());
  }
  return out;
}

}  // namespace

Json integer_to_json(const Integer& n) {
  if (auto v = to_int64(n)) return *v;
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Json document(Json content) {
  return Json{{"header", {{"tool", "nlo"}, {"version", NLO_VERSION}}}, {"content", std::move(content)}};
}

Json open_document(const Json& doc, const std::string& expected_type) {
  const Json& content = doc.contains("content") ? doc.at("content") : doc;
  check_schema(content);
  if (!content.contains("type") || content.at("type") != expected_type)
    throw DomainError("expected a '" + expected_type + "' document");
  return content;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json params_to_json(const FamilyParams& fp) {
  return Json{{"p", fp.p()},   {"k", fp.k()},           {"sign", fp.sign_value()},
              {"ell", fp.ell()}, {"m", fp.m()},         {"q", integer_to_json(fp.q())},
              {"unverified_range", fp.unverified_range()}};
}

FamilyParams params_from_json(const Json& j) {
  int sign = j.at("sign").get<int>();
  if (sign != 1 && sign != -1) throw DomainError("sign must be -1 or +1");
  return FamilyParams::make(j.at("p").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                            sign < 0 ? FamilySign::Minus : FamilySign::Plus, j.at("ell").get<std::int64_t>(),
                            j.at("m").get<std::int64_t>(), j.value("unverified_range", false));
}

Json presentation_to_json(const Presentation& pres) {
  Json rels = Json::array();
  for (const auto& r : pres.relators()) rels.push_back(format_word(r));
  Json labels = Json::object();
  for (const auto& [name, w] : pres.labels()) labels[name] = format_word(w);
  return Json{{"schema_version", kSchemaVersion},
              {"type", "presentation"},
              {"generators", alphabet_to_json(pres.generators())},
              {"relators", rels},
              {"labels", labels}};
}

Presentation presentation_from_json(const Json& j) {
  Json c = open_document(j, "presentation");
  Alphabet a = alphabet_from_json(c.at("generators"));
  std::vector<Word> rels;
  for (const auto& r : c.at("relators")) rels.push_back(parse_word(r.get<std::string>(), a));
  std::map<std::string, Word> labels;
  const Json label_map = c.value("labels", Json::object());
  for (const auto& [name, w] : label_map.items())
    labels[name] = parse_word(w.get<std::string>(), a);
  return Presentation(std::move(a), std::move(rels), std::move(labels));
}

Json knot_data_to_json(const KnotData& kd) {
  auto ls = is_lspace_knot(kd.params);
  return Json{{"schema_version", kSchemaVersion},
              {"type", "knot_data"},
              {"params", params_to_json(kd.params)},
              {"relation", {{"lhs", format_word(kd.relation.lhs)}, {"rhs", format_word(kd.relation.rhs)}}},
              {"presentation", presentation_to_json(kd.presentation)},
              {"peripheral",
               {{"mu", format_word(kd.peripheral.mu)},
                {"s", format_word(kd.peripheral.s)},
                {"v", integer_to_json(kd.peripheral.v)}}},
              {"lspace", {{"is_lspace_knot", ls.is_lspace}, {"case", to_string(ls.matched)}}},
              {"flags", kd.flags}};
}

KnotData knot_data_from_json(const Json& j) {
  Json c = open_document(j, "knot_data");
  FamilyParams fp = params_from_json(c.at("params"));
  const Json& rel = c.at("relation");
  const Json& per = c.at("peripheral");
  KnotData kd{fp,
              Relation{parse_word(rel.at("lhs").get<std::string>()), parse_word(rel.at("rhs").get<std::string>())},
              presentation_from_json(c.at("presentation")),
              {parse_word(per.at("mu").get<std::string>()), parse_word(per.at("s").get<std::string>()),
               integer_from_json(per.at("v"))},
              c.value("flags", std::vector<std::string>{})};
  return kd;
}

Json certificate_to_json(const Certificate& cert) {
  Json trace = Json::array();
  for (const auto& st : cert.trace)
    trace.push_back({{"relator", st.relation},
                     {"direction", st.direction == RewriteStep::Direction::Forward ? "forward" : "reverse"},
                     {"rotation", st.rotation},
                     {"length", st.length},
                     {"position", st.position}});
  return Json{{"schema_version", cert.schema_version},
              {"type", "certificate"},
              {"params", params_to_json(cert.params)},
              {"case", to_string(cert.construction)},
              {"generator_change",
               {{"from", alphabet_to_json(cert.change.from())},
                {"to", alphabet_to_json(cert.change.to())},
                {"forward", substitution_to_json(cert.change.forward())},
                {"backward", substitution_to_json(cert.change.backward())}}},
              {"trace", trace},
              {"positive_s", format_word(cert.positive_s)},
              {"v", integer_to_json(cert.v)},
              {"bound", cert.bound()},
              {"hypotheses",
               {{"x_is_meridian", cert.hypotheses.x_is_meridian},
                {"s_positive", cert.hypotheses.s_positive},
                {"s_contains_x", cert.hypotheses.s_contains_x}}}};
}

Certificate certificate_from_json(const Json& j) {
  Json c = open_document(j, "certificate");
  const Json& gc = c.at("generator_change");
  RewriteTrace trace;
  for (const auto& st : c.at("trace")) {
    auto dir = st.at("direction").get<std::string>();
    if (dir != "forward" && dir != "reverse") throw DomainError("trace direction must be forward or reverse");
    trace.push_back({st.at("relator").get<std::size_t>(),
                     dir == "forward" ? RewriteStep::Direction::Forward : RewriteStep::Direction::Reverse,
                     st.at("rotation").get<std::size_t>(), st.at("length").get<std::size_t>(),
                     st.at("position").get<std::size_t>()});
  }
  const Json& h = c.at("hypotheses");
  return Certificate{c.at("schema_version").get<int>(),
                     params_from_json(c.at("params")),
                     certificate_case_from_string(c.at("case").get<std::string>()),
                     GeneratorChange::unchecked(alphabet_from_json(gc.at("from")), alphabet_from_json(gc.at("to")),
                                                substitution_from_json(gc.at("forward")),
                                                substitution_from_json(gc.at("backward"))),
                     std::move(trace),
                     parse_word(c.at("positive_s").get<std::string>()),
                     integer_from_json(c.at("v")),
                     {h.at("x_is_meridian").get<bool>(), h.at("s_positive").get<bool>(),
                      h.at("s_contains_x").get<bool>()}};
}

}  // namespace nlo
