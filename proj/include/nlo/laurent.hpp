#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "nlo/integer.hpp"

namespace nlo {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Integer constant);

  static LaurentPolynomial monomial(Integer coefficient, std::int64_t exponent);
  // c0 + c1 t + c2 t^2 + ...
  static LaurentPolynomial from_coefficients(std::initializer_list<long long> ascending);

  const std::map<std::int64_t, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::int64_t exponent) const;
  std::int64_t min_exponent() const;  // requires nonzero
  std::int64_t max_exponent() const;  // requires nonzero
  // max_exponent - min_exponent (the breadth).
  std::int64_t span() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  LaurentPolynomial shifted(std::int64_t by) const;
  // t -> 1/t
  LaurentPolynomial reflected() const;
  // Unit normal form: lowest exponent 0, positive leading coefficient.
  LaurentPolynomial normalized() const;

  Integer evaluate(const Integer& t) const;  // requires min_exponent() >= 0 or t = +-1
  Integer at_one() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(std::int64_t e, const Integer& c);
  std::map<std::int64_t, Integer> terms_;
};

class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact quotient a / b in Z[t, 1/t]; throws DivisionError if b does not divide a.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Equal up to multiplication by +-t^k.
bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Text form: sparse terms c*t^e sorted by ascending exponent, e.g.
// "1*t^0 - 1*t^1 + 1*t^2"; the zero polynomial is "0".
std::string format_polynomial(const LaurentPolynomial& f);
// Accepts the printed form and the usual shorthands ("t^2 - t + 1", "-3*t^-1").
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace nlo
