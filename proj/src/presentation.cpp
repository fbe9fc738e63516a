#include "nlo/presentation.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace nlo {

Presentation::Presentation(Alphabet generators, std::vector<Word> relators,
                           std::map<std::string, Word> labels)
    : generators_(std::move(generators)), relators_(std::move(relators)), labels_(std::move(labels)) {
  for (const auto& r : relators_)
    if (!uses_only(r, generators_))
      throw DomainError("relator " + format_word(r) + " uses a generator outside the alphabet");
  for (const auto& [name, w] : labels_)
    if (!uses_only(w, generators_))
      throw DomainError("label '" + name + "' uses a generator outside the alphabet");
}

const Word& Presentation::label(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) throw DomainError("presentation has no label '" + name + "'");
  return it->second;
}

Presentation Presentation::with_relator(Word relator) const {
  auto rels = relators_;
  rels.push_back(std::move(relator));
  return Presentation(generators_, std::move(rels), labels_);
}

Presentation Presentation::with_label(const std::string& name, Word w) const {
  auto labels = labels_;
  labels[name] = std::move(w);
  return Presentation(generators_, relators_, std::move(labels));
}

std::vector<Relation> Presentation::relations() const {
  std::vector<Relation> out;
  out.reserve(relators_.size());
  for (const auto& r : relators_) out.push_back(Relation::from_relator(r));
  return out;
}

namespace {

std::string cyclic_letters(const Relation& rel, RewriteStep::Direction d) {
  std::string r = expand(rel.relator());
  return d == RewriteStep::Direction::Forward ? r : invert_letters(r);
}

// The letter string produced by one step, before free reduction.
std::string splice(std::string_view word, std::string_view doubled, std::size_t n,
                   std::size_t rotation, std::size_t length, std::size_t position) {
  std::string out;
  out.reserve(word.size() + n);
  out.append(word.substr(0, position));
  out.append(invert_letters(doubled.substr(rotation + length, n - length)));
  out.append(word.substr(position + length));
  return out;
}

struct RelatorStrings {
  std::size_t n = 0;
  std::string doubled[2];
};

std::vector<RelatorStrings> prepare(std::span<const Relation> relations) {
  std::vector<RelatorStrings> out;
  for (const auto& rel : relations) {
    RelatorStrings rs;
    std::string fwd = cyclic_letters(rel, RewriteStep::Direction::Forward);
    std::string rev = invert_letters(fwd);
    rs.n = fwd.size();
    rs.doubled[0] = fwd + fwd;
    rs.doubled[1] = rev + rev;
    out.push_back(std::move(rs));
  }
  return out;
}

// Calls visit(step, reduced_result) for every applicable step, in the order
// position, relation, direction, rotation, length. Stops when visit returns true.
template <typename Visit>
bool for_each_neighbour(const std::string& word, const std::vector<RelatorStrings>& rels, Visit&& visit) {
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const auto& rs = rels[ri];
      if (rs.n == 0) continue;
      for (int d = 0; d < 2; ++d) {
        const std::string& doubled = rs.doubled[d];
        for (std::size_t rot = 0; rot < rs.n; ++rot) {
          std::size_t limit = std::min(rs.n, word.size() - pos);
          std::size_t len = 0;
          while (len < limit && word[pos + len] == doubled[rot + len]) {
            ++len;
            RewriteStep step{ri, d == 0 ? RewriteStep::Direction::Forward : RewriteStep::Direction::Reverse,
                             rot, len, pos};
            if (visit(step, reduce_letters(splice(word, doubled, rs.n, rot, len, pos)))) return true;
          }
        }
      }
    }
  }
  return false;
}

struct Node {
  std::string letters;
  RewriteTrace trace;
};

template <typename OnNode>
void breadth_first(const Word& w, std::span<const Relation> relations, std::size_t max_steps,
                   std::size_t node_limit, OnNode&& on_node) {
  auto rels = prepare(relations);
  std::unordered_set<std::string> seen;
  std::vector<Node> frontier{{expand(w), {}}};
  seen.insert(frontier[0].letters);
  if (on_node(frontier[0])) return;
  for (std::size_t depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    bool stop = false;
    for (const auto& node : frontier) {
      stop = for_each_neighbour(node.letters, rels, [&](const RewriteStep& step, std::string result) {
        if (!seen.insert(result).second) return false;
        if (seen.size() > node_limit)
          throw SearchLimitError("relation search exceeded the node limit of " +
                                 std::to_string(node_limit));
        Node child{std::move(result), node.trace};
        child.trace.push_back(step);
        if (on_node(child)) return true;
        next.push_back(std::move(child));
        return false;
      });
      if (stop) return;
    }
    frontier = std::move(next);
  }
}

}  // namespace

RewriteStep lhs_to_rhs_step(const Relation& rel, std::size_t position, std::size_t relation_index) {
  std::string l = expand(rel.lhs), h = expand(rel.rhs);
  if (expand(rel.relator()) != l + invert_letters(h))
    throw RewriteError("relation sides cancel against each other; no direct lhs->rhs step");
  return {relation_index, RewriteStep::Direction::Forward, 0, l.size(), position};
}

RewriteStep rhs_to_lhs_step(const Relation& rel, std::size_t position, std::size_t relation_index) {
  std::string l = expand(rel.lhs), h = expand(rel.rhs);
  if (expand(rel.relator()) != l + invert_letters(h))
    throw RewriteError("relation sides cancel against each other; no direct rhs->lhs step");
  return {relation_index, RewriteStep::Direction::Reverse, 0, h.size(), position};
}

Word apply_relation(const Word& w, const Relation& rel, const RewriteStep& step) {
  std::string r = cyclic_letters(rel, step.direction);
  std::size_t n = r.size();
  if (n == 0) throw RewriteError("relation is trivial");
  if (step.rotation >= n || step.length > n)
    throw RewriteError("rewrite step rotation/length out of range for relator of length " +
                       std::to_string(n));
  std::string letters = expand(w);
  if (step.position + step.length > letters.size())
    throw RewriteError("rewrite step position " + std::to_string(step.position) +
                       " runs past the end of the word");
  std::string doubled = r + r;
  if (letters.compare(step.position, step.length, doubled, step.rotation, step.length) != 0)
    throw RewriteError("occurrence mismatch at letter position " + std::to_string(step.position));
  return Word::from_letters(
      reduce_letters(splice(letters, doubled, n, step.rotation, step.length, step.position)));
}

Word replay(const Word& w, std::span<const Relation> relations, const RewriteTrace& trace) {
  Word current = w;
  for (const auto& step : trace) {
    if (step.relation >= relations.size())
      throw RewriteError("rewrite step refers to relation " + std::to_string(step.relation) +
                         " but only " + std::to_string(relations.size()) + " exist");
    current = apply_relation(current, relations[step.relation], step);
  }
  return current;
}

std::vector<Reachable> find_relation_applications(const Word& w, const Relation& rel,
                                                  std::size_t max_steps, std::size_t node_limit) {
  return find_relation_applications(w, std::span<const Relation>(&rel, 1), max_steps, node_limit);
}

std::vector<Reachable> find_relation_applications(const Word& w, std::span<const Relation> relations,
                                                  std::size_t max_steps, std::size_t node_limit) {
  std::vector<Reachable> out;
  breadth_first(w, relations, max_steps, node_limit, [&](const Node& node) {
    out.push_back({node.trace, Word::from_letters(node.letters)});
    return false;
  });
  return out;
}

std::optional<Reachable> search_relation_applications(const Word& w, std::span<const Relation> relations,
                                                      std::size_t max_steps,
                                                      const std::function<bool(const Word&)>& target,
                                                      std::size_t node_limit) {
  std::optional<Reachable> found;
  breadth_first(w, relations, max_steps, node_limit, [&](const Node& node) {
    Word candidate = Word::from_letters(node.letters);
    if (!target(candidate)) return false;
    found = Reachable{node.trace, std::move(candidate)};
    return true;
  });
  return found;
}

GeneratorChange::GeneratorChange(Alphabet from, Alphabet to, Substitution forward, Substitution backward)
    : from_(std::move(from)), to_(std::move(to)), forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!round_trips())
    throw DomainError("generator change maps are not mutually inverse");
}

GeneratorChange GeneratorChange::unchecked(Alphabet from, Alphabet to, Substitution forward,
                                           Substitution backward) {
  GeneratorChange gc;
  gc.from_ = std::move(from);
  gc.to_ = std::move(to);
  gc.forward_ = std::move(forward);
  gc.backward_ = std::move(backward);
  return gc;
}

bool GeneratorChange::round_trips() const {
  for (Generator g : from_.generators()) {
    auto it = forward_.find(g);
    if (it == forward_.end() || !uses_only(it->second, to_)) return false;
  }
  for (Generator g : to_.generators()) {
    auto it = backward_.find(g);
    if (it == backward_.end() || !uses_only(it->second, from_)) return false;
  }
  try {
    for (Generator g : from_.generators())
      if (substitute(forward_.at(g), backward_) != Word::generator(g)) return false;
    for (Generator g : to_.generators())
      if (substitute(backward_.at(g), forward_) != Word::generator(g)) return false;
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

GeneratorChange GeneratorChange::identity(const Alphabet& alphabet) {
  Substitution id;
  for (Generator g : alphabet.generators()) id[g] = Word::generator(g);
  return GeneratorChange(alphabet, alphabet, id, id);
}

Presentation change_generators(const Presentation& pres, const GeneratorChange& gc) {
  if (!(gc.from() == pres.generators()))
    throw DomainError("generator change does not start from the presentation's alphabet");
  if (!gc.round_trips()) throw DomainError("generator change maps are not mutually inverse");
  std::vector<Word> relators;
  relators.reserve(pres.relators().size());
  for (const auto& r : pres.relators()) relators.push_back(gc.push(r));
  std::map<std::string, Word> labels;
  for (const auto& [name, w] : pres.labels()) labels[name] = gc.push(w);
  return Presentation(gc.to(), std::move(relators), std::move(labels));
}

}  // namespace nlo
