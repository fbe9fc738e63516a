#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlo {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& n) { return n.str(); }

// Accepts an optional leading sign followed by decimal digits.
Integer parse_integer(std::string_view text);

std::optional<std::int64_t> to_int64(const Integer& n);

// Throws std::length_error when n does not fit; `what` names the quantity.
std::int64_t require_int64(const Integer& n, std::string_view what);

Integer gcd(Integer a, Integer b);

// Invalid parameters or ill-formed domain input.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nlo
