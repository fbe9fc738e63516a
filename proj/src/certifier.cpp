#include "nlo/certifier.hpp"

#include <sstream>

namespace nlo {

namespace {

const Word X = Word::generator('x');
const Word Y = Word::generator('y');
const Word XY = concat(X, Y);
const Word YX = concat(Y, X);

Word pw(const Word& w, const Integer& n) { return power(w, n); }

bool needs_relation(CertificateCase c, const FamilyParams& fp) {
  return c == CertificateCase::MinusPMinus2M1 || (c == CertificateCase::MinusPMinus1 && fp.k() == 1);
}

}  // namespace

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::MinusPMinus1: return "minus/l=p-1";
    case CertificateCase::MinusPMinus2M1: return "minus/l=p-2,m=1";
    case CertificateCase::PlusPMinus1: return "plus/l=p-1";
    case CertificateCase::PlusPMinus2M1: return "plus/l=p-2,m=1";
  }
  return "?";
}

CertificateCase certificate_case_from_string(const std::string& s) {
  for (auto c : {CertificateCase::MinusPMinus1, CertificateCase::MinusPMinus2M1,
                 CertificateCase::PlusPMinus1, CertificateCase::PlusPMinus2M1})
    if (to_string(c) == s) return c;
  throw DomainError("unknown certificate case '" + s + "'");
}

GeneratorChange xy_change_minus(std::int64_t k) {
  if (k < 1) throw DomainError("generator change needs k >= 1");
  const Integer kk = k;
  Substitution forward{{'a', concat(pw(YX, kk - 1), Y)}, {'b', YX}};
  Substitution backward{{'x', concat(Word::generator('a', -1), Word::generator('b', kk))},
                        {'y', concat(Word::generator('b', 1 - kk), Word::generator('a'))}};
  GeneratorChange gc = GeneratorChange::unchecked(Alphabet{'a', 'b'}, Alphabet{'x', 'y'}, forward, backward);
  if (!gc.round_trips())
    throw std::logic_error("minus generator change failed its round trip at k = " + std::to_string(k));
  return gc;
}

GeneratorChange xy_change_plus(std::int64_t k) {
  if (k < 1) throw DomainError("generator change needs k >= 1");
  const Integer kk = k;
  Substitution forward{{'a', concat(pw(XY, kk), X)}, {'b', XY}};
  Substitution backward{{'x', concat(Word::generator('b', -kk), Word::generator('a'))},
                        {'y', concat(Word::generator('a', -1), Word::generator('b', kk + 1))}};
  GeneratorChange gc = GeneratorChange::unchecked(Alphabet{'a', 'b'}, Alphabet{'x', 'y'}, forward, backward);
  if (!gc.round_trips())
    throw std::logic_error("plus generator change failed its round trip at k = " + std::to_string(k));
  return gc;
}

GeneratorChange xy_change(FamilySign sign, std::int64_t k) {
  return sign == FamilySign::Minus ? xy_change_minus(k) : xy_change_plus(k);
}

CertificateCase classify_for_certificate(const FamilyParams& fp) {
  const auto p = fp.p(), ell = fp.ell(), m = fp.m();
  const bool minus = fp.sign() == FamilySign::Minus;
  if (ell == p - 1) return minus ? CertificateCase::MinusPMinus1 : CertificateCase::PlusPMinus1;
  if (ell == p - 2 && m == 1) return minus ? CertificateCase::MinusPMinus2M1 : CertificateCase::PlusPMinus2M1;
  if (ell == 2 && m == 1 && p >= 5)
    throw CertificationError("no certificate construction known for l = 2, m = 1 with p >= 5 (" +
                             fp.describe() + ")");
  std::ostringstream msg;
  if (ell == p - 2)
    msg << "nearest case l = p-2 requires m = 1, got m = " << m;
  else
    msg << "nearest case l = p-1 requires l = " << p - 1 << ", got l = " << ell;
  throw CertificationError("parameters outside the certifiable cases: " + msg.str() + " (" +
                           fp.describe() + ")");
}

Word closed_form(CertificateCase c, const FamilyParams& fp) {
  const Integer p = fp.p(), k = fp.k(), m = fp.m();
  switch (c) {
    case CertificateCase::MinusPMinus1:
      if (fp.k() == 1) return pw(concat({Y, X, pw(Y, m)}), p - 1);
      return substituted_framing_form(c, fp);
    case CertificateCase::MinusPMinus2M1: {
      const Word t = pw(YX, k - 1);
      return concat({X, t, pw(concat({Y, t, Y}), p - 2), t, Y});
    }
    case CertificateCase::PlusPMinus1:
      return concat(pw(concat(pw(XY, k + 1), pw(Y, m - 1)), p - 1), concat(pw(XY, k), X));
    case CertificateCase::PlusPMinus2M1:
      return concat({pw(XY, 2 * k + 1), pw(concat(Y, pw(XY, k)), p - 3), pw(XY, k), X});
  }
  throw std::logic_error("unhandled certificate case");
}

Word substituted_framing_form(CertificateCase c, const FamilyParams& fp) {
  const Integer p = fp.p(), k = fp.k(), m = fp.m();
  switch (c) {
    case CertificateCase::MinusPMinus1: {
      const Word t = pw(YX, k - 1);
      return concat(pw(concat(t, pw(Y, m + 1)), p - 1), concat(t, Y));
    }
    case CertificateCase::MinusPMinus2M1: {
      // s = a (a b^(1-2k) a^2)^(p-2) a pushed through a -> (yx)^(k-1) y, b -> yx
      const Word a = concat(pw(YX, k - 1), Y);
      return concat({a, pw(concat({a, pw(YX, 1 - 2 * k), a, a}), p - 2), a});
    }
    case CertificateCase::PlusPMinus1:
    case CertificateCase::PlusPMinus2M1:
      return closed_form(c, fp);
  }
  throw std::logic_error("unhandled certificate case");
}

Certificate certify(const KnotData& kd) {
  const FamilyParams& fp = kd.params;
  const CertificateCase c = classify_for_certificate(fp);
  GeneratorChange gc = xy_change(fp.sign(), fp.k());
  const Word target = closed_form(c, fp);
  const Word pushed = gc.push(kd.peripheral.s);

  if (pushed != substituted_framing_form(c, fp))
    throw CertificationError("substituted framing " + format_word(pushed) +
                             " disagrees with its closed form " +
                             format_word(substituted_framing_form(c, fp)));

  RewriteTrace trace;
  if (needs_relation(c, fp)) {
    const auto relations = kd.presentation.relations();
    auto found = search_relation_applications(
        kd.peripheral.s, relations, 1, [&](const Word& w) { return gc.push(w) == target; });
    if (!found)
      throw CertificationError("no single relation application turns s into " + format_word(target));
    trace = found->trace;
  } else if (pushed != target) {
    throw CertificationError("substituted framing " + format_word(pushed) +
                             " disagrees with the positive form " + format_word(target));
  }

  const Word replayed = gc.push(replay(kd.peripheral.s, kd.presentation.relations(), trace));
  if (replayed != target)
    throw CertificationError("trace replay gives " + format_word(replayed) + ", expected " +
                             format_word(target));

  HypothesisRecord hyp{gc.pull(X) == kd.peripheral.mu, is_positive(target), contains(target, 'x')};
  if (!hyp.s_positive || !hyp.s_contains_x)
    throw CertificationError("framing word " + format_word(target) + " is not positive with an x");
  if (!hyp.x_is_meridian) throw CertificationError("x does not pull back to the meridian");

  return Certificate{kCertificateSchemaVersion, fp, c, std::move(gc), std::move(trace), target,
                     kd.peripheral.v, hyp};
}

bool Verdict::failed(Clause c) const {
  for (const auto& f : failures)
    if (f.clause == c) return true;
  return false;
}

std::string to_string(Verdict::Clause c) {
  switch (c) {
    case Verdict::Clause::RoundTrip: return "(i) generator change round trip";
    case Verdict::Clause::MeridianIsX: return "(ii) x is the meridian";
    case Verdict::Clause::TraceReplay: return "(iii) trace replay";
    case Verdict::Clause::Positivity: return "(iv) positive s containing x";
    case Verdict::Clause::Framing: return "(v) framing";
  }
  return "?";
}

std::string Verdict::summary() const {
  if (passed()) return "PASS";
  std::string out = "FAIL";
  for (const auto& f : failures) out += "\n  " + to_string(f.clause) + ": " + f.message;
  return out;
}

Verdict verify_certificate(const KnotData& kd, const Certificate& cert) {
  Verdict verdict;
  auto fail = [&](Verdict::Clause c, std::string msg) { verdict.failures.push_back({c, std::move(msg)}); };

  const GeneratorChange& gc = cert.change;
  const bool alphabets_ok = gc.from() == Alphabet{'a', 'b'} && gc.to() == Alphabet{'x', 'y'};
  if (!alphabets_ok)
    fail(Verdict::Clause::RoundTrip, "generator change must map {a, b} <-> {x, y}");
  else if (!gc.round_trips())
    fail(Verdict::Clause::RoundTrip, "forward and backward maps are not mutually inverse");

  try {
    Word x_back = gc.pull(X);
    if (x_back != kd.peripheral.mu)
      fail(Verdict::Clause::MeridianIsX,
           "x pulls back to " + format_word(x_back) + ", meridian is " + format_word(kd.peripheral.mu));
  } catch (const std::exception& e) {
    fail(Verdict::Clause::MeridianIsX, e.what());
  }

  try {
    Word replayed = gc.push(replay(kd.peripheral.s, kd.presentation.relations(), cert.trace));
    if (replayed != cert.positive_s)
      fail(Verdict::Clause::TraceReplay,
           "replay gives " + format_word(replayed) + ", certificate has " + format_word(cert.positive_s));
  } catch (const std::exception& e) {
    fail(Verdict::Clause::TraceReplay, e.what());
  }

  if (!uses_only(cert.positive_s, Alphabet{'x', 'y'}) || !is_positive(cert.positive_s) ||
      !contains(cert.positive_s, 'x'))
    fail(Verdict::Clause::Positivity, format_word(cert.positive_s) + " is not a positive word in x, y containing x");

  if (cert.v != kd.peripheral.v)
    fail(Verdict::Clause::Framing,
         "certificate bound v = " + cert.v.str() + " but the knot framing is " + kd.peripheral.v.str());
  else if (cert.v <= 0)
    fail(Verdict::Clause::Framing, "framing must be positive");

  return verdict;
}

bool SlopeRange::contains(const Slope& r) const {
  return r.numerator() > 0 && r.denominator() > 0 && r.numerator() >= v * r.denominator();
}

SlopeRange slope_range(const Certificate& cert) { return {cert.v}; }

}  // namespace nlo
