#include "nlo/twisted_torus.hpp"

#include <tuple>

namespace nlo {

namespace {

Word gen(Generator g, const Integer& e) { return Word::generator(g, e); }

}  // namespace

FamilyParams FamilyParams::make(std::int64_t p, std::int64_t k, FamilySign sign, std::int64_t ell,
                                std::int64_t m, bool allow_unverified_range) {
  auto fail = [](const std::string& msg) { throw DomainError("invalid parameters: " + msg); };
  if (p < 2) fail("p must be >= 2 (got " + std::to_string(p) + ")");
  if (k < 1) fail("k must be >= 1 (got " + std::to_string(k) + ")");
  if (sign != FamilySign::Minus && sign != FamilySign::Plus) fail("sign must be -1 or +1");
  const std::int64_t q = p * k + static_cast<int>(sign);
  if (q < 2) fail("q = pk + sign must be >= 2 (got " + std::to_string(q) + ")");
  if (ell < 2) fail("l must be >= 2 (got " + std::to_string(ell) + ")");
  if (ell > p) fail("l must be <= p (got l = " + std::to_string(ell) + ", p = " + std::to_string(p) + ")");
  if (ell == p && !allow_unverified_range)
    fail("l = p is outside the verified range 2 <= l <= p - 1; pass the unverified-range flag to build it");
  if (m < 0) fail("m must be >= 0 (got " + std::to_string(m) + ")");
  FamilyParams fp;
  fp.p_ = p;
  fp.k_ = k;
  fp.sign_ = sign;
  fp.ell_ = ell;
  fp.m_ = m;
  return fp;
}

std::string FamilyParams::describe() const {
  return "T(" + std::to_string(p_) + "," + q().str() + ";" + std::to_string(ell_) + "," +
         std::to_string(m_) + ") [p=" + std::to_string(p_) + " k=" + std::to_string(k_) +
         " sign=" + (sign_ == FamilySign::Minus ? "-1" : "+1") + "]";
}

bool operator<(const FamilyParams& a, const FamilyParams& b) {
  return std::tuple(a.p_, a.k_, static_cast<int>(a.sign_), a.ell_, a.m_) <
         std::tuple(b.p_, b.k_, static_cast<int>(b.sign_), b.ell_, b.m_);
}

Slope::Slope(Integer numerator, Integer denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("slope denominator must be nonzero");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Slope Slope::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_integer(text));
  return Slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Slope::str() const { return num_.str() + "/" + den_.str(); }

KnotData build_minus(const FamilyParams& fp) {
  if (fp.sign() != FamilySign::Minus) throw DomainError("build_minus needs sign = -1");
  const Integer p = fp.p(), k = fp.k(), ell = fp.ell(), m = fp.m();
  const Integer pl = p - ell;
  const Word a = gen('a', 1), b = gen('b', 1);
  // C = b^(1 - k(p-l)) a^(p-l)
  const Word C = concat(gen('b', 1 - k * pl), gen('a', pl));
  const Word Cm = power(C, m);
  Word lhs = concat({gen('a', pl), power(concat(a, Cm), ell - 1), a});
  Word rhs = concat({gen('b', k * pl - 1), power(concat(gen('b', k), Cm), ell - 1), gen('b', k)});
  Word mu = concat(invert(a), gen('b', k));
  Word s = concat({gen('a', pl - 1), power(concat(a, Cm), ell), a});

  KnotData kd{fp, Relation{lhs, rhs}, {}, {mu, s, fp.framing()}, {}};
  kd.presentation = Presentation(Alphabet{'a', 'b'}, {kd.relation.relator()}, {{"mu", mu}, {"s", s}});
  if (fp.m() == 0) kd.flags.push_back("m = 0: untwisted degeneration, outside the standing assumption m > 0");
  if (fp.unverified_range()) kd.flags.push_back("l = p: unverified range");
  return kd;
}

KnotData build_plus(const FamilyParams& fp) {
  if (fp.sign() != FamilySign::Plus) throw DomainError("build_plus needs sign = +1");
  const Integer p = fp.p(), k = fp.k(), ell = fp.ell(), m = fp.m();
  const Integer pl = p - ell;
  const Word a = gen('a', 1);
  // C = b^(k(p-l)+1) a^(l-p)
  const Word C = concat(gen('b', k * pl + 1), gen('a', -pl));
  const Word Cm = power(C, m);
  Word lhs = concat({a, power(concat(Cm, a), ell - 1), gen('a', pl)});
  Word rhs = concat({gen('b', k), power(concat(Cm, gen('b', k)), ell - 1), gen('b', k * pl + 1)});
  Word mu = concat(gen('b', -k), a);
  Word s = concat(power(concat(Cm, a), ell), gen('a', pl));

  KnotData kd{fp, Relation{lhs, rhs}, {}, {mu, s, fp.framing()}, {}};
  kd.presentation = Presentation(Alphabet{'a', 'b'}, {kd.relation.relator()}, {{"mu", mu}, {"s", s}});
  if (fp.m() == 0) kd.flags.push_back("m = 0: untwisted degeneration, outside the standing assumption m > 0");
  if (fp.unverified_range()) kd.flags.push_back("l = p: unverified range");
  return kd;
}

KnotData build(const FamilyParams& params) {
  return params.sign() == FamilySign::Minus ? build_minus(params) : build_plus(params);
}

LSpaceClassification is_lspace_knot(std::int64_t p, std::int64_t ell, std::int64_t m) {
  if (ell == p - 1) return {true, LSpaceCase::PMinus1};
  if (ell == p - 2 && m == 1) return {true, LSpaceCase::PMinus2M1};
  if (ell == 2 && m == 1) return {true, LSpaceCase::Two_M1};
  return {false, LSpaceCase::None};
}

std::string to_string(LSpaceCase c) {
  switch (c) {
    case LSpaceCase::PMinus1: return "l = p-1";
    case LSpaceCase::PMinus2M1: return "l = p-2, m = 1";
    case LSpaceCase::Two_M1: return "l = 2, m = 1";
    case LSpaceCase::None: return "none";
  }
  return "none";
}

Word surgery_relator(const KnotData& kd, const Slope& slope) {
  const Integer& pp = slope.numerator();
  const Integer& qq = slope.denominator();
  return concat(power(kd.peripheral.mu, pp - qq * kd.peripheral.v), power(kd.peripheral.s, qq));
}

Presentation surgery_presentation(const KnotData& kd, const Slope& slope) {
  return kd.presentation.with_relator(surgery_relator(kd, slope));
}

}  // namespace nlo
