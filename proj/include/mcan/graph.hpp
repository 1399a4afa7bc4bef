#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcan/kb.hpp"
#include "mcan/mapping.hpp"
#include "mcan/query.hpp"

namespace mcan {

// A finite set of ground atoms, indexed by predicate and by predicate plus
// one bound argument position.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Atom> atoms);
  static Graph fromAbox(const KnowledgeBase& kb);

  // Sorted, duplicate-free.
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool contains(const Atom& atom) const;
  TermSet terms() const;

  std::span<const std::size_t> withPredicate(const std::string& predicate) const;
  std::span<const std::size_t> withArgument(const std::string& predicate, std::size_t position,
                                            const Term& term) const;

  // The atoms whose terms all satisfy `keep`.
  template <typename Pred>
  Graph filterTerms(Pred keep) const {
    std::vector<Atom> kept;
    for (const Atom& atom : atoms_) {
      bool ok = true;
      for (const Term& t : atom.args) ok = ok && keep(t);
      if (ok) kept.push_back(atom);
    }
    return Graph(std::move(kept));
  }

  // One ABox-style fact per line: "hasLicense(Alice,_:Alice|hasLicense) ."
  std::string toString() const;

  bool operator==(const Graph& other) const { return atoms_ == other.atoms_; }

 private:
  static std::string argumentKey(const std::string& predicate, std::size_t position, const Term& term);

  std::vector<Atom> atoms_;
  std::unordered_map<std::string, std::vector<std::size_t>> byPredicate_;
  std::unordered_map<std::string, std::vector<std::size_t>> byArgument_;
};

// Matches of a single triple pattern.
MappingSet matchPattern(const Query& triple, const Graph& g);
MappingSet sparqlAns(const Query& q, const Graph& g);
// sparqlAns(q,g) ∩ sparqlAns(branch,g); throws ShapeError unless branch ∈ branch(q).
MappingSet sparqlAnsBranch(const Query& q, const Graph& g, const Query& branch);
// Every mapping that some answer extends.
MappingSet eAns(const Query& q, const Graph& g);
// Downward ⪯-closure of a mapping set.
MappingSet downwardClosure(const MappingSet& answers);

}  // namespace mcan
