#include "nlo/laurent.hpp"

#include <stdexcept>

namespace nlo {

LaurentPolynomial::LaurentPolynomial(Integer constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(Integer coefficient, std::int64_t exponent) {
  LaurentPolynomial f;
  f.add_term(exponent, coefficient);
  return f;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(std::initializer_list<long long> ascending) {
  LaurentPolynomial f;
  std::int64_t e = 0;
  for (long long c : ascending) f.add_term(e++, c);
  return f;
}

void LaurentPolynomial::add_term(std::int64_t e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPolynomial::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

std::int64_t LaurentPolynomial::span() const { return max_exponent() - min_exponent(); }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return {};
  LaurentPolynomial out = shifted(-min_exponent());
  if (out.terms_.rbegin()->second < 0) out = -out;
  return out;
}

Integer LaurentPolynomial::evaluate(const Integer& t) const {
  if (!is_zero() && min_exponent() < 0 && t != 1 && t != -1)
    throw std::domain_error("negative exponents can only be evaluated at t = +-1");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    if (t == -1) {
      if (e % 2 != 0) term = -term;
    } else if (t != 1) {
      term *= pow(t, static_cast<unsigned>(e));
    }
    total += term;
  }
  return total;
}

Integer LaurentPolynomial::at_one() const { return evaluate(1); }

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  const std::int64_t shift = a.min_exponent() - b.min_exponent();
  LaurentPolynomial rem = a.shifted(-a.min_exponent());
  const LaurentPolynomial div = b.shifted(-b.min_exponent());
  const std::int64_t dd = div.max_exponent();
  const Integer lead = div.coefficient(dd);
  LaurentPolynomial quot;
  while (!rem.is_zero() && rem.max_exponent() >= dd) {
    const std::int64_t e = rem.max_exponent();
    const Integer c = rem.coefficient(e);
    if (c % lead != 0) throw DivisionError("inexact division: leading coefficients do not divide");
    auto step = LaurentPolynomial::monomial(c / lead, e - dd);
    quot += step;
    rem -= step * div;
  }
  if (!rem.is_zero()) throw DivisionError("inexact division: nonzero remainder");
  return quot.shifted(shift);
}

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

std::string format_polynomial(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first) {
      out += c.str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += Integer(abs(c)).str();
    }
    out += "*t^" + std::to_string(e);
    first = false;
  }
  return out;
}

LaurentPolynomial parse_polynomial(std::string_view text) {
  LaurentPolynomial f;
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  ws();
  if (i == text.size()) throw ParseError(i, "empty polynomial");
  bool first = true;
  while (true) {
    ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      ws();
    } else if (!first) {
      throw ParseError(i, "expected '+' or '-' between terms");
    }
    Integer coeff = 1;
    bool have_coeff = false;
    std::size_t j = digits(i);
    if (j > i) {
      coeff = parse_integer(text.substr(i, j - i));
      have_coeff = true;
      i = j;
    }
    std::int64_t exponent = 0;
    if (i < text.size() && text[i] == '*') {
      if (!have_coeff) throw ParseError(i, "unexpected '*'");
      ++i;
      if (i >= text.size() || text[i] != 't') throw ParseError(i, "expected 't' after '*'");
    }
    if (i < text.size() && text[i] == 't') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t end = digits(i);
        if (end == i) throw ParseError(i, "expected exponent digits");
        exponent = require_int64(parse_integer(text.substr(start, end - start)), "exponent");
        i = end;
      }
    } else if (!have_coeff) {
      throw ParseError(i, "expected a coefficient or 't'");
    }
    f += LaurentPolynomial::monomial(sign < 0 ? Integer(-coeff) : coeff, exponent);
    first = false;
  }
  return f;
}

}  // namespace nlo
