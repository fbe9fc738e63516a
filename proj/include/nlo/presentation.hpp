#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlo/word.hpp"

namespace nlo {

// An equation lhs = rhs in a presented group. Its relator is reduce(lhs rhs^-1).
struct Relation {
  Word lhs;
  Word rhs;

  Word relator() const { return concat(lhs, invert(rhs)); }
  static Relation from_relator(Word r) { return {std::move(r), Word{}}; }
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(Alphabet generators, std::vector<Word> relators,
               std::map<std::string, Word> labels = {});

  const Alphabet& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::map<std::string, Word>& labels() const { return labels_; }

  // Throws DomainError if the label is absent.
  const Word& label(const std::string& name) const;
  bool has_label(const std::string& name) const { return labels_.count(name) != 0; }

  Presentation with_relator(Word relator) const;
  Presentation with_label(const std::string& name, Word w) const;

  // Relator i as the relation r = 1.
  Relation relation(std::size_t i) const { return Relation::from_relator(relators_.at(i)); }
  std::vector<Relation> relations() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet generators_;
  std::vector<Word> relators_;
  std::map<std::string, Word> labels_;
};

// A single application of a relation inside a word.
//
// With R the letter string of the relation's relator (inverted when
// direction is Reverse) and R' its cyclic rotation starting at `rotation`,
// the step replaces the letters [position, position + length) of the current
// word, which must equal the first `length` letters of R', by the inverse of
// the remaining letters of R'. Positions index the letter expansion of the
// current (reduced) word.
//
// Rotation 0 with length |lhs| on the forward relator rewrites lhs -> rhs;
// rotation 0 with length |rhs| on the reverse relator rewrites rhs -> lhs.
struct RewriteStep {
  enum class Direction { Forward, Reverse };

  std::size_t relation = 0;
  Direction direction = Direction::Forward;
  std::size_t rotation = 0;
  std::size_t length = 0;
  std::size_t position = 0;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

// Occurrence mismatch or an out-of-range step.
class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RewriteStep lhs_to_rhs_step(const Relation& rel, std::size_t position, std::size_t relation_index = 0);
RewriteStep rhs_to_lhs_step(const Relation& rel, std::size_t position, std::size_t relation_index = 0);

Word apply_relation(const Word& w, const Relation& rel, const RewriteStep& step);
// Uses relations[step.relation]; replays every step in order.
Word replay(const Word& w, std::span<const Relation> relations, const RewriteTrace& trace);

struct Reachable {
  RewriteTrace trace;
  Word word;
};

inline constexpr std::size_t kDefaultNodeLimit = 100000;

// Breadth-first enumeration of all words reachable from w by at most
// max_steps relation applications; each word is reported once, with the
// first trace that reached it. Throws SearchLimitError when more than
// node_limit distinct words are discovered.
std::vector<Reachable> find_relation_applications(const Word& w, const Relation& rel,
                                                  std::size_t max_steps,
                                                  std::size_t node_limit = kDefaultNodeLimit);
std::vector<Reachable> find_relation_applications(const Word& w, std::span<const Relation> relations,
                                                  std::size_t max_steps,
                                                  std::size_t node_limit = kDefaultNodeLimit);

// Same traversal, stopping at the first word accepted by `target`.
std::optional<Reachable> search_relation_applications(
    const Word& w, std::span<const Relation> relations, std::size_t max_steps,
    const std::function<bool(const Word&)>& target, std::size_t node_limit = kDefaultNodeLimit);

// A change of generating set: forward sends each old generator to a word in
// the new alphabet, backward sends each new generator to a word in the old one.
class GeneratorChange {
 public:
  // Throws DomainError unless the maps are mutually inverse on generators.
  GeneratorChange(Alphabet from, Alphabet to, Substitution forward, Substitution backward);
  // No round-trip check (for deserialising documents that are verified later).
  static GeneratorChange unchecked(Alphabet from, Alphabet to, Substitution forward,
                                   Substitution backward);

  const Alphabet& from() const { return from_; }
  const Alphabet& to() const { return to_; }
  const Substitution& forward() const { return forward_; }
  const Substitution& backward() const { return backward_; }

  bool round_trips() const;
  Word push(const Word& old_word) const { return substitute(old_word, forward_); }
  Word pull(const Word& new_word) const { return substitute(new_word, backward_); }

  static GeneratorChange identity(const Alphabet& alphabet);

  friend bool operator==(const GeneratorChange&, const GeneratorChange&) = default;

 private:
  GeneratorChange() = default;
  Alphabet from_, to_;
  Substitution forward_, backward_;
};

Presentation change_generators(const Presentation& pres, const GeneratorChange& gc);

}  // namespace nlo
