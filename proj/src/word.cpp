#include "nlo/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlo {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("alphabet must contain at least one generator");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!is_generator(generators_[i]))
      throw DomainError(std::string("generator names are lowercase letters, got '") +
                        generators_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j] == generators_[i])
        throw DomainError(std::string("duplicate generator '") + generators_[i] + "'");
  }
}

bool Alphabet::contains(Generator g) const { return index_of(g) < generators_.size(); }

std::size_t Alphabet::index_of(Generator g) const {
  return static_cast<std::size_t>(std::find(generators_.begin(), generators_.end(), g) -
                                  generators_.begin());
}

Word Word::reduce(std::span<const Syllable> raw) {
  Word out;
  auto& stack = out.syllables_;
  stack.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return out;
}

Word Word::generator(Generator g, Integer exponent) {
  return reduce({Syllable{g, std::move(exponent)}});
}

Word Word::from_letters(std::string_view letters) {
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < letters.size();) {
    char c = letters[i];
    std::size_t j = i;
    while (j < letters.size() && letters[j] == c) ++j;
    Integer e = static_cast<long long>(j - i);
    raw.push_back({letter_generator(c), letter_is_inverse(c) ? Integer(-e) : e});
    i = j;
  }
  return reduce(raw);
}

Integer Word::length() const {
  Integer n = 0;
  for (const auto& s : syllables_) n += abs(s.exponent);
  return n;
}

bool operator<(const Word& lhs, const Word& rhs) {
  const auto& a = lhs.syllables_;
  const auto& b = rhs.syllables_;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].generator != b[i].generator) return a[i].generator < b[i].generator;
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
  }
  return a.size() < b.size();
}

Word invert(const Word& w) {
  std::vector<Syllable> raw(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return Word::reduce(raw);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Syllable> raw;
  raw.reserve(u.syllable_count() + v.syllable_count());
  raw.insert(raw.end(), u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(raw);
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Syllable> raw;
  for (const auto& p : parts) raw.insert(raw.end(), p.syllables().begin(), p.syllables().end());
  return Word::reduce(raw);
}

namespace {

// Splits w = c * core * c^-1 with core cyclically reduced.
void cyclic_split(const Word& w, Word& conj, Word& core) {
  const auto& s = w.syllables();
  std::size_t i = 0, j = s.size();
  std::vector<Syllable> prefix;
  while (j - i >= 2 && s[i].generator == s[j - 1].generator) {
    if (s[i].exponent == -s[j - 1].exponent) {
      prefix.push_back(s[i]);
      ++i;
      --j;
    } else {
      break;
    }
  }
  conj = Word::reduce(prefix);
  std::vector<Syllable> mid(s.begin() + static_cast<std::ptrdiff_t>(i),
                            s.begin() + static_cast<std::ptrdiff_t>(j));
  core = Word::reduce(mid);
}

}  // namespace

Word power(const Word& w, const Integer& n) {
  if (n == 0 || w.is_identity()) return {};
  if (n < 0) return power(invert(w), -n);
  Word conj, core;
  cyclic_split(w, conj, core);
  const auto& cs = core.syllables();
  Word body;
  if (cs.size() == 1) {
    body = Word::generator(cs[0].generator, cs[0].exponent * n);
  } else if (cs.size() >= 2 && cs.front().generator == cs.back().generator) {
    // core = g^e * mid * g^f with mid nonempty: core^n = g^e (mid g^(e+f))^(n-1) mid g^f.
    Word head = Word::generator(cs.front().generator, cs.front().exponent);
    Word tail = Word::generator(cs.back().generator, cs.back().exponent);
    std::vector<Syllable> mid_raw(cs.begin() + 1, cs.end() - 1);
    Word mid = Word::reduce(mid_raw);
    Word joined = concat(mid, concat(tail, head));
    body = concat({head, power(joined, n - 1), mid, tail});
  } else {
    std::int64_t reps = require_int64(n, "power exponent");
    if (static_cast<double>(reps) * static_cast<double>(cs.size()) > 1e8)
      throw std::length_error("power would exceed the syllable limit");
    std::vector<Syllable> raw;
    raw.reserve(cs.size() * static_cast<std::size_t>(reps));
    for (std::int64_t r = 0; r < reps; ++r) raw.insert(raw.end(), cs.begin(), cs.end());
    body = Word::reduce(raw);
  }
  return concat({conj, body, invert(conj)});
}

Word substitute(const Word& w, const Substitution& images) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.generator);
    if (it == images.end())
      throw DomainError(std::string("no image for generator '") + s.generator + "'");
    Word image = power(it->second, s.exponent);
    raw.insert(raw.end(), image.syllables().begin(), image.syllables().end());
  }
  return Word::reduce(raw);
}

Integer exponent_sum(const Word& w, Generator g) {
  Integer total = 0;
  for (const auto& s : w.syllables())
    if (s.generator == g) total += s.exponent;
  return total;
}

bool is_positive(const Word& w) {
  if (w.is_identity()) return false;
  return std::all_of(w.syllables().begin(), w.syllables().end(),
                     [](const Syllable& s) { return s.exponent > 0; });
}

bool contains(const Word& w, Generator g) {
  return std::any_of(w.syllables().begin(), w.syllables().end(),
                     [g](const Syllable& s) { return s.generator == g; });
}

std::vector<Generator> support(const Word& w) {
  std::vector<Generator> out;
  for (const auto& s : w.syllables())
    if (std::find(out.begin(), out.end(), s.generator) == out.end()) out.push_back(s.generator);
  return out;
}

bool uses_only(const Word& w, const Alphabet& alphabet) {
  return std::all_of(w.syllables().begin(), w.syllables().end(),
                     [&](const Syllable& s) { return alphabet.contains(s.generator); });
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (!is_generator(c)) throw ParseError(i, std::string("expected generator letter, got '") + c + "'");
    ++i;
    Integer e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == digits) throw ParseError(i, "expected exponent digits after '^'");
      e = parse_integer(text.substr(start, i - start));
    }
    raw.push_back({c, std::move(e)});
    skip_ws();
  }
  return Word::reduce(raw);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w = parse_word(text);
  for (const auto& s : w.syllables())
    if (!alphabet.contains(s.generator))
      throw DomainError(std::string("generator '") + s.generator + "' is not in the alphabet");
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) {
      out += '^';
      out += s.exponent.str();
    }
  }
  return out;
}

std::string expand(const Word& w, std::size_t max_letters) {
  Integer total = w.length();
  if (total > max_letters)
    throw std::length_error("letter expansion of " + total.str() + " letters exceeds the cap");
  std::string out;
  out.reserve(static_cast<std::size_t>(total));
  for (const auto& s : w.syllables()) {
    char c = s.exponent > 0 ? s.generator : inverse_letter(s.generator);
    out.append(static_cast<std::size_t>(abs(s.exponent)), c);
  }
  return out;
}

std::string reduce_letters(std::string_view letters) {
  std::string out;
  out.reserve(letters.size());
  for (char c : letters) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string invert_letters(std::string_view letters) {
  std::string out(letters.rbegin(), letters.rend());
  for (auto& c : out) c = inverse_letter(c);
  return out;
}

}  // namespace nlo
