#include "nlo/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "nlo/alexander.hpp"
#include "nlo/certifier.hpp"
#include "nlo/coset.hpp"
#include "nlo/serialize.hpp"
#include "nlo/smith.hpp"
#include "nlo/twisted_torus.hpp"

namespace nlo::cli {

namespace {

constexpr const char* kGrammar = R"(usage: nlo <subcommand> [options]

subcommands:
  present   --p P --k K --sign S --ell L --m M           knot group and peripheral words
  certify   <knot> [--output FILE]                        non-left-orderability certificate
  verify    --file CERT [--knot KNOTDOC]                  replay and check a certificate
  surgery   <knot> --slope P/Q                            surgery quotient presentation
  homology  <knot> [--slope P/Q]                          H1 via Smith normal form
  alexander <knot>                                        Alexander polynomial, L-space threshold
  order     <knot> --slope P/Q [--max-cosets N] [--csv F] order of the surgery group (Todd-Coxeter)
  sweep     [--p-range A..B] [--k-range A..B] [--m-range A..B] [--signs -1,1]
            [--cases all|minus-p1,minus-p2,plus-p1,plus-p2] [--threads N] [--output FILE]

<knot> is --p --k --sign --ell --m [--allow-unverified-range]
all subcommands take --format json|text (default text)
exit status: 0 ok, 1 domain error, 2 verification failure, 64 usage
environment: NLO_MAX_COSETS overrides the coset enumeration cap
)";

struct KnotOptions {
  std::int64_t p = 0, k = 0, ell = 0, m = 0;
  int sign = 0;
  bool unverified = false;

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "strands of the torus knot")->required();
    app->add_option("--k", k, "q = pk + sign")->required();
    app->add_option("--sign", sign, "-1 or +1")->required()->check(CLI::IsMember({-1, 1}));
    app->add_option("--ell", ell, "number of twisted strands")->required();
    app->add_option("--m", m, "number of full twists")->required();
    app->add_flag("--allow-unverified-range", unverified, "accept l = p");
  }
  FamilyParams params() const {
    return FamilyParams::make(p, k, sign < 0 ? FamilySign::Minus : FamilySign::Plus, ell, m, unverified);
  }
};

struct Range {
  std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = require_int64(parse_integer(s), "range bound");
    return {v, v};
  }
  Range r{require_int64(parse_integer(s.substr(0, dots)), "range bound"),
          require_int64(parse_integer(s.substr(dots + 2)), "range bound")};
  if (r.lo > r.hi) throw DomainError("empty range " + s);
  return r;
}

std::size_t max_cosets_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("NLO_MAX_COSETS")) {
    try {
      auto v = parse_integer(env);
      if (v >= 1) return static_cast<std::size_t>(require_int64(v, "NLO_MAX_COSETS"));
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("NLO_MAX_COSETS must be a positive integer, got '") + env + "'");
  }
  return fallback;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Json verdict_to_json(const Verdict& v) {
  Json failures = Json::array();
  for (const auto& f : v.failures) failures.push_back({{"clause", to_string(f.clause)}, {"message", f.message}});
  return Json{{"verdict", v.passed() ? "PASS" : "FAIL"}, {"failures", failures}};
}

std::string abelian_text(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void print_knot_text(std::ostream& out, const KnotData& kd) {
  auto ls = is_lspace_knot(kd.params);
  out << "knot      " << kd.params.describe() << "\n"
      << "relation  " << format_word(kd.relation.lhs) << " = " << format_word(kd.relation.rhs) << "\n"
      << "relator   " << format_word(kd.presentation.relators()[0]) << "\n"
      << "mu        " << format_word(kd.peripheral.mu) << "\n"
      << "s         " << format_word(kd.peripheral.s) << "\n"
      << "v = " << kd.peripheral.v << "\n"
      << "lspace    " << (ls.is_lspace ? "yes" : "no") << " (" << to_string(ls.matched) << ")\n";
  for (const auto& f : kd.flags) out << "flag      " << f << "\n";
}

void print_certificate_text(std::ostream& out, const Certificate& cert, const Verdict& v) {
  out << "knot      " << cert.params.describe() << "\n"
      << "case      " << to_string(cert.construction) << "\n";
  for (const auto& [g, w] : cert.change.forward()) out << "forward   " << g << " -> " << format_word(w) << "\n";
  for (const auto& [g, w] : cert.change.backward()) out << "backward  " << g << " -> " << format_word(w) << "\n";
  out << "trace     " << cert.trace.size() << " step(s)\n";
  for (const auto& st : cert.trace)
    out << "  relator " << st.relation << " " << (st.direction == RewriteStep::Direction::Forward ? "forward" : "reverse")
        << " rotation " << st.rotation << " length " << st.length << " position " << st.position << "\n";
  out << "positive_s " << format_word(cert.positive_s) << "\n"
      << "v = " << cert.v << "\n"
      << "bound     " << cert.bound() << "\n"
      << "verdict   " << v.summary() << "\n";
}

struct SweepItem {
  FamilyParams params;
  Json result;
  bool failed = false;
  std::string line;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"non-left-orderability certificates for twisted torus knot surgeries", "nlo"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  KnotOptions knot;
  std::string slope_text, output_path, file_path, knot_path, csv_path;
  std::optional<std::size_t> max_cosets_opt;

  auto* present = app.add_subcommand("present", "knot group and peripheral structure");
  knot.add_to(present);
  add_format(present);

  auto* certify_cmd = app.add_subcommand("certify", "build and verify a certificate");
  knot.add_to(certify_cmd);
  certify_cmd->add_option("--output", output_path, "write the certificate document here");
  add_format(certify_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate document");
  verify_cmd->add_option("--file", file_path, "certificate document")->required();
  verify_cmd->add_option("--knot", knot_path, "knot_data document (default: rebuilt from the certificate)");
  add_format(verify_cmd);

  auto* surgery_cmd = app.add_subcommand("surgery", "surgery quotient presentation");
  knot.add_to(surgery_cmd);
  surgery_cmd->add_option("--slope", slope_text, "p/q")->required();
  add_format(surgery_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "first homology");
  knot.add_to(homology_cmd);
  homology_cmd->add_option("--slope", slope_text, "p/q (omit for the knot group)");
  add_format(homology_cmd);

  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial");
  knot.add_to(alexander_cmd);
  add_format(alexander_cmd);

  auto* order_cmd = app.add_subcommand("order", "order of the surgery quotient");
  knot.add_to(order_cmd);
  order_cmd->add_option("--slope", slope_text, "p/q")->required();
  order_cmd->add_option("--max-cosets", max_cosets_opt, "enumeration cap");
  order_cmd->add_option("--csv", csv_path, "export the coset table");
  add_format(order_cmd);

  std::string p_range = "3..7", k_range = "1..4", m_range = "1..3", signs = "-1,1", cases = "all";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep_cmd = app.add_subcommand("sweep", "certify and verify a parameter grid");
  sweep_cmd->add_option("--p-range", p_range);
  sweep_cmd->add_option("--k-range", k_range);
  sweep_cmd->add_option("--m-range", m_range, "m values for the l = p-1 cases (l = p-2 uses m = 1)");
  sweep_cmd->add_option("--signs", signs);
  sweep_cmd->add_option("--cases", cases);
  sweep_cmd->add_option("--threads", threads);
  sweep_cmd->add_option("--output", output_path);
  add_format(sweep_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << kGrammar;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammar;
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (present->parsed()) {
      KnotData kd = build(knot.params());
      if (json) out << dump_document(document(knot_data_to_json(kd)));
      else print_knot_text(out, kd);
      return kOk;
    }

    if (certify_cmd->parsed()) {
      KnotData kd = build(knot.params());
      Certificate cert = certify(kd);
      Verdict v = verify_certificate(kd, cert);
      Json doc = document(certificate_to_json(cert));
      if (!output_path.empty()) {
        std::ofstream f(output_path);
        if (!f) throw DomainError("cannot write " + output_path);
        f << dump_document(doc);
      }
      if (json) {
        doc["verification"] = verdict_to_json(v);
        out << dump_document(doc);
      } else {
        print_certificate_text(out, cert, v);
      }
      return v.passed() ? kOk : kVerificationFailed;
    }

    if (verify_cmd->parsed()) {
      Certificate cert = certificate_from_json(read_json_file(file_path));
      KnotData kd = knot_path.empty() ? build(cert.params) : knot_data_from_json(read_json_file(knot_path));
      Verdict v = verify_certificate(kd, cert);
      if (json) out << dump_document(document(Json{{"schema_version", kSchemaVersion},
                                                   {"type", "verification"},
                                                   {"params", params_to_json(cert.params)},
                                                   {"result", verdict_to_json(v)}}));
      else out << "verdict   " << v.summary() << "\n";
      return v.passed() ? kOk : kVerificationFailed;
    }

    if (surgery_cmd->parsed()) {
      KnotData kd = build(knot.params());
      Slope r = Slope::parse(slope_text);
      Presentation pres = surgery_presentation(kd, r);
      if (json) {
        Json c = presentation_to_json(pres);
        out << dump_document(document(c));
      } else {
        out << "slope     " << r.str() << "\n";
        for (const auto& rel : pres.relators()) out << "relator   " << format_word(rel) << "\n";
      }
      return kOk;
    }

    if (homology_cmd->parsed()) {
      KnotData kd = build(knot.params());
      Presentation pres = slope_text.empty() ? kd.presentation : surgery_presentation(kd, Slope::parse(slope_text));
      AbelianGroup g = h1(pres);
      if (json) {
        Json torsion = Json::array();
        for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
        auto order = g.order();
        out << dump_document(document(Json{{"schema_version", kSchemaVersion},
                                           {"type", "homology"},
                                           {"params", params_to_json(kd.params)},
                                           {"slope", slope_text.empty() ? Json(nullptr) : Json(Slope::parse(slope_text).str())},
                                           {"free_rank", g.free_rank},
                                           {"torsion", torsion},
                                           {"order", order ? integer_to_json(*order) : Json(nullptr)}}));
      } else {
        out << "H1 = " << abelian_text(g) << "\n";
      }
      return kOk;
    }

    if (alexander_cmd->parsed()) {
      KnotData kd = build(knot.params());
      LaurentPolynomial delta = alexander_polynomial(kd);
      std::optional<ThresholdReport> th;
      if (is_lspace_knot(kd.params).is_lspace) th = lspace_surgery_threshold(kd);
      if (json) {
        Json c{{"schema_version", kSchemaVersion},
               {"type", "alexander"},
               {"params", params_to_json(kd.params)},
               {"polynomial", format_polynomial(delta)},
               {"v", integer_to_json(kd.peripheral.v)}};
        if (th) {
          c["genus"] = integer_to_json(th->genus);
          c["lspace_threshold"] = th->threshold.str();
        }
        out << dump_document(document(c));
      } else {
        out << "alexander " << format_polynomial(delta) << "\n";
        if (th) out << "genus     " << th->genus << "\nthreshold r >= " << th->threshold.numerator() << " (2g-1)\n";
        out << "v = " << kd.peripheral.v << "\n";
      }
      return kOk;
    }

    if (order_cmd->parsed()) {
      KnotData kd = build(knot.params());
      Slope r = Slope::parse(slope_text);
      std::size_t cap = max_cosets_opt ? *max_cosets_opt : max_cosets_from_env(kDefaultMaxCosets);
      CosetTable table = todd_coxeter(surgery_presentation(kd, r), {}, cap);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw DomainError("cannot write " + csv_path);
        f << table.to_csv();
      }
      if (json) {
        out << dump_document(document(Json{{"schema_version", kSchemaVersion},
                                           {"type", "order"},
                                           {"params", params_to_json(kd.params)},
                                           {"slope", r.str()},
                                           {"status", table.complete() ? "complete" : "capped"},
                                           {"order", table.complete() ? Json(table.size()) : Json(nullptr)},
                                           {"max_cosets", cap}}));
      } else if (table.complete()) {
        out << table.size() << "\n";
      } else {
        out << "unknown (enumeration capped at " << cap << " cosets)\n";
      }
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      Range pr = parse_range(p_range), kr = parse_range(k_range), mr = parse_range(m_range);
      std::vector<int> sign_list;
      {
        std::stringstream ss(signs);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          int s = static_cast<int>(require_int64(parse_integer(tok), "sign"));
          if (s != 1 && s != -1) throw DomainError("signs must be -1 or 1");
          sign_list.push_back(s);
        }
      }
      std::vector<std::string> case_list;
      {
        std::stringstream ss(cases);
        std::string tok;
        while (std::getline(ss, tok, ',')) case_list.push_back(tok);
      }
      auto wanted = [&](const std::string& name) {
        return std::find(case_list.begin(), case_list.end(), "all") != case_list.end() ||
               std::find(case_list.begin(), case_list.end(), name) != case_list.end();
      };
      for (const auto& c : case_list)
        if (c != "all" && c != "minus-p1" && c != "minus-p2" && c != "plus-p1" && c != "plus-p2")
          throw DomainError("unknown case '" + c + "'");

      std::vector<FamilyParams> grid;
      for (auto p = pr.lo; p <= pr.hi; ++p)
        for (auto k = kr.lo; k <= kr.hi; ++k)
          for (int s : sign_list) {
            const auto sign = s < 0 ? FamilySign::Minus : FamilySign::Plus;
            const std::string prefix = s < 0 ? "minus" : "plus";
            if (wanted(prefix + "-p1"))
              for (auto m = mr.lo; m <= mr.hi; ++m) grid.push_back(FamilyParams::make(p, k, sign, p - 1, m));
            if (wanted(prefix + "-p2") && p - 2 >= 2) grid.push_back(FamilyParams::make(p, k, sign, p - 2, 1));
          }
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

      std::vector<SweepItem> items;
      for (const auto& fp : grid) items.push_back({fp, {}, false, {}});
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
          auto& item = items[i];
          Json r{{"params", params_to_json(item.params)}};
          try {
            KnotData kd = build(item.params);
            Certificate cert = certify(kd);
            Verdict v = verify_certificate(kd, cert);
            ThresholdReport th = lspace_surgery_threshold(kd);
            r["case"] = to_string(cert.construction);
            r["v"] = integer_to_json(cert.v);
            r["bound"] = cert.bound();
            r["trace_length"] = cert.trace.size();
            r["positive_s"] = format_word(cert.positive_s);
            r["lspace_threshold"] = th.threshold.str();
            r["verification"] = verdict_to_json(v);
            item.failed = !v.passed();
            item.line = item.params.describe() + "  " + to_string(cert.construction) + "  " + cert.bound() +
                        "  2g-1 = " + th.threshold.numerator().str() + "  " + (v.passed() ? "PASS" : "FAIL");
          } catch (const std::exception& e) {
            r["verification"] = {{"verdict", "FAIL"}, {"error", e.what()}};
            item.failed = true;
            item.line = item.params.describe() + "  FAIL  " + e.what();
          }
          item.result = std::move(r);
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
      }

      std::size_t failed = 0;
      Json instances = Json::array();
      for (const auto& item : items) {
        failed += item.failed ? 1 : 0;
        instances.push_back(item.result);
      }
      Json doc = document(Json{{"schema_version", kSchemaVersion},
                               {"type", "sweep"},
                               {"instances", instances},
                               {"summary", {{"total", items.size()}, {"passed", items.size() - failed}, {"failed", failed}}}});
      if (!output_path.empty()) {
        std::ofstream f(output_path);
        if (!f) throw DomainError("cannot write " + output_path);
        f << dump_document(doc);
      }
      if (json) {
        out << dump_document(doc);
      } else {
        for (const auto& item : items) out << item.line << "\n";
        out << items.size() - failed << "/" << items.size() << " PASS\n";
      }
      return failed == 0 ? kOk : kVerificationFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  err << kGrammar;
  return kUsage;
}

}  // namespace nlo::cli
