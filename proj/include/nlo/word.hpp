#pragma once

// Free-group words over single-letter generators, stored as run-length
// syllables (generator, nonzero exponent).
//
// Conventions:
//   * generators are lowercase letters 'a'..'z';
//   * the empty word is the identity;
//   * the identity is *not* positive (a positive word has at least one
//     syllable and every exponent > 0).
//
// Letter strings: several algorithms need the fully expanded letter sequence.
// Those use std::string with 'a' for a and 'A' for a^-1.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlo/integer.hpp"

namespace nlo {

using Generator = char;

inline bool is_generator(char c) { return c >= 'a' && c <= 'z'; }

// Ordered set of distinct generators.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);
  Alphabet(std::initializer_list<Generator> generators)
      : Alphabet(std::vector<Generator>(generators)) {}

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool contains(Generator g) const;
  // Position of g, or size() if absent.
  std::size_t index_of(Generator g) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> generators_;
};

struct Syllable {
  Generator generator;
  Integer exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary syllable list (zero exponents allowed).
  static Word reduce(std::span<const Syllable> raw);
  static Word reduce(std::initializer_list<Syllable> raw) {
    return reduce(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word generator(Generator g, Integer exponent = 1);
  // 'a' is a, 'A' is a^-1.
  static Word from_letters(std::string_view letters);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  // Sum of |exponent| over syllables.
  Integer length() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Arbitrary total order (for use as a map key).
  friend bool operator<(const Word& lhs, const Word& rhs);

 private:
  std::vector<Syllable> syllables_;
};

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, const Integer& n);

using Substitution = std::map<Generator, Word>;

// Homomorphic image of w. Throws DomainError if a generator of w has no image.
Word substitute(const Word& w, const Substitution& images);

Integer exponent_sum(const Word& w, Generator g);
bool is_positive(const Word& w);
bool contains(const Word& w, Generator g);
// Generators that occur in w, in order of first appearance.
std::vector<Generator> support(const Word& w);
bool uses_only(const Word& w, const Alphabet& alphabet);

Word parse_word(std::string_view text);
// Also checks every generator belongs to `alphabet`.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w);

// Letter expansion. Throws std::length_error above `max_letters`.
inline constexpr std::size_t kDefaultLetterCap = std::size_t{1} << 24;
std::string expand(const Word& w, std::size_t max_letters = kDefaultLetterCap);
// Free reduction directly on a letter string.
std::string reduce_letters(std::string_view letters);
std::string invert_letters(std::string_view letters);

inline char inverse_letter(char c) {
  return static_cast<char>(c >= 'a' ? c - 'a' + 'A' : c - 'A' + 'a');
}
inline Generator letter_generator(char c) {
  return static_cast<Generator>(c >= 'a' ? c : c - 'A' + 'a');
}
inline bool letter_is_inverse(char c) { return c < 'a'; }

}  // namespace nlo
