#include "nlo/integer.hpp"

#include <limits>

namespace nlo {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError(i, "expected digits");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError(i, std::string("unexpected character '") + c + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::optional<std::int64_t> to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return n.convert_to<std::int64_t>();
}

std::int64_t require_int64(const Integer& n, std::string_view what) {
  auto v = to_int64(n);
  if (!v) throw std::length_error(std::string(what) + " does not fit in 64 bits: " + n.str());
  return *v;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace nlo
