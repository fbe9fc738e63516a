#pragma once

#include <map>
#include <string>

#include "nlo/laurent.hpp"
#include "nlo/word.hpp"

namespace nlo {

// Element of the integral group ring Z[F]: finite sum of coefficient * word.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement of(const Word& w, Integer coefficient = 1);

  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& add(const Word& w, const Integer& c);
  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  GroupRingElement operator-() const;
  // u * (sum c_i w_i) = sum c_i (u w_i)
  friend GroupRingElement operator*(const Word& u, const GroupRingElement& x);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, Integer> terms_;
};

// Free derivative d/dg: D(uv) = D(u) + u D(v), D(g) = 1, D(g^-1) = -g^-1, D(h) = 0.
GroupRingElement fox_derivative(const Word& w, Generator g);

// Ring map Z[F] -> Z[t, 1/t] sending each generator g to t^(images[g]).
LaurentPolynomial abelianize(const GroupRingElement& x, const std::map<Generator, std::int64_t>& images);

std::string format_group_ring(const GroupRingElement& x);

}  // namespace nlo
