#include "mcan/graph.hpp"

#include <algorithm>

#include "mcan/errors.hpp"

namespace mcan {

Graph::Graph(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& atom = atoms_[i];
    byPredicate_[atom.predicate].push_back(i);
    for (std::size_t pos = 0; pos < atom.args.size(); ++pos) {
      byArgument_[argumentKey(atom.predicate, pos, atom.args[pos])].push_back(i);
    }
  }
}

Graph Graph::fromAbox(const KnowledgeBase& kb) { return Graph(std::vector<Atom>(kb.abox().begin(), kb.abox().end())); }

std::string Graph::argumentKey(const std::string& predicate, std::size_t position, const Term& term) {
  // Predicate names cannot contain '\x1f', so the key is unambiguous.
  std::string key = predicate;
  key += '\x1f';
  key += static_cast<char>('0' + position);
  key += term.isAnonymous() ? 'a' : 'i';
  key += term.name();
  return key;
}

bool Graph::contains(const Atom& atom) const { return std::binary_search(atoms_.begin(), atoms_.end(), atom); }

TermSet Graph::terms() const {
  TermSet out;
  for (const Atom& atom : atoms_) out.insert(atom.args.begin(), atom.args.end());
  return out;
}

std::span<const std::size_t> Graph::withPredicate(const std::string& predicate) const {
  auto it = byPredicate_.find(predicate);
  if (it == byPredicate_.end()) return {};
  return it->second;
}

std::span<const std::size_t> Graph::withArgument(const std::string& predicate, std::size_t position,
                                                 const Term& term) const {
  auto it = byArgument_.find(argumentKey(predicate, position, term));
  if (it == byArgument_.end()) return {};
  return it->second;
}

std::string Graph::toString() const {
  std::string out;
  for (const Atom& atom : atoms_) out += atom.toString() + " .\n";
  return out;
}

MappingSet matchPattern(const Query& triple, const Graph& g) {
  const auto& args = triple.args();
  const std::string& predicate = triple.predicate();

  std::span<const std::size_t> candidates = g.withPredicate(predicate);
  for (std::size_t pos = 0; pos < args.size(); ++pos) {
    if (!args[pos].isVariable()) {
      candidates = g.withArgument(predicate, pos, args[pos].constant());
      break;
    }
  }

  std::vector<SolutionMapping> out;
  for (std::size_t index : candidates) {
    const Atom& atom = g.atoms()[index];
    if (atom.arity() != args.size()) continue;
    std::vector<Binding> bindings;
    bool ok = true;
    for (std::size_t pos = 0; pos < args.size() && ok; ++pos) {
      const Term& value = atom.args[pos];
      if (!args[pos].isVariable()) {
        ok = args[pos].constant() == value;
        continue;
      }
      const Variable& v = args[pos].variable();
      auto seen = std::find_if(bindings.begin(), bindings.end(), [&](const Binding& b) { return b.first == v; });
      if (seen == bindings.end()) {
        bindings.emplace_back(v, value);
      } else {
        ok = seen->second == value;
      }
    }
    if (ok) out.emplace_back(std::move(bindings));
  }
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet sparqlAns(const Query& q, const Graph& g) {
  switch (q.kind()) {
    case QueryKind::Triple:
      return matchPattern(q, g);
    case QueryKind::Select:
      return project(sparqlAns(q.body(), g), q.projection());
    case QueryKind::Union:
      return setUnion(sparqlAns(q.left(), g), sparqlAns(q.right(), g));
    case QueryKind::Join:
      return join(sparqlAns(q.left(), g), sparqlAns(q.right(), g));
    case QueryKind::Opt:
      return leftOuterJoin(sparqlAns(q.left(), g), sparqlAns(q.right(), g));
  }
  return {};
}

MappingSet sparqlAnsBranch(const Query& q, const Graph& g, const Query& branch) {
  if (!isBranchOf(branch, q)) throw ShapeError(branch.toString() + " is not a branch of " + q.toString());
  return setIntersection(sparqlAns(q, g), sparqlAns(branch, g));
}

MappingSet downwardClosure(const MappingSet& answers) {
  std::vector<SolutionMapping> out;
  for (const auto& m : answers) {
    const auto& bindings = m.bindings();
    if (bindings.size() >= 20) throw std::length_error("restriction lattice too large: " + m.toString());
    const std::size_t subsets = std::size_t{1} << bindings.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<Binding> kept;
      for (std::size_t i = 0; i < bindings.size(); ++i) {
        if (mask & (std::size_t{1} << i)) kept.push_back(bindings[i]);
      }
      out.emplace_back(std::move(kept));
    }
  }
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet eAns(const Query& q, const Graph& g) { return downwardClosure(sparqlAns(q, g)); }

}  // namespace mcan
