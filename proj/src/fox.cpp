#include "nlo/fox.hpp"

#include <stdexcept>

namespace nlo {

GroupRingElement GroupRingElement::of(const Word& w, Integer coefficient) {
  GroupRingElement x;
  x.add(w, coefficient);
  return x;
}

GroupRingElement& GroupRingElement::add(const Word& w, const Integer& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator*(const Word& u, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms_) out.add(concat(u, w), c);
  return out;
}

GroupRingElement fox_derivative(const Word& w, Generator g) {
  constexpr std::int64_t kMaxRun = 10'000'000;
  GroupRingElement out;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.generator == g) {
      const std::int64_t e = require_int64(s.exponent, "syllable exponent");
      if (e > kMaxRun || e < -kMaxRun) throw std::length_error("syllable too long for Fox calculus");
      if (e > 0) {
        for (std::int64_t i = 0; i < e; ++i) out.add(concat(prefix, Word::generator(g, i)), 1);
      } else {
        for (std::int64_t i = 1; i <= -e; ++i) out.add(concat(prefix, Word::generator(g, -i)), -1);
      }
    }
    prefix = concat(prefix, Word::generator(s.generator, s.exponent));
  }
  return out;
}

LaurentPolynomial abelianize(const GroupRingElement& x, const std::map<Generator, std::int64_t>& images) {
  LaurentPolynomial out;
  for (const auto& [w, c] : x.terms()) {
    Integer e = 0;
    for (const auto& s : w.syllables()) {
      auto it = images.find(s.generator);
      if (it == images.end())
        throw DomainError(std::string("no abelian image for generator '") + s.generator + "'");
      e += s.exponent * it->second;
    }
    out += LaurentPolynomial::monomial(c, require_int64(e, "abelianized exponent"));
  }
  return out;
}

std::string format_group_ring(const GroupRingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += Integer(abs(c)).str() + "*[" + format_word(w) + "]";
  }
  return out;
}

}  // namespace nlo
