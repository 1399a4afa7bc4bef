#pragma once

#include <map>
#include <set>
#include <vector>

#include "mcan/graph.hpp"
#include "mcan/kb.hpp"
#include "mcan/query.hpp"

namespace mcan {

// Reflexive-transitive closures of a TBox. Every role name of the TBox
// contributes itself and its inverse to roleClosure, and exists r,
// exists inv(r) to conceptClosure.
struct SaturatedTBox {
  std::map<BasicConcept, std::set<BasicConcept>> conceptClosure;  // B -> {B' | B ⊑* B'}
  std::map<RoleExpr, std::set<RoleExpr>> roleClosure;             // R -> {S | R ⊑* S}
  std::set<std::pair<BasicConcept, BasicConcept>> disjoint;       // symmetric
  std::set<std::string> roleNames;

  // Union of the closures of `concepts`.
  std::set<BasicConcept> entailed(const std::set<BasicConcept>& concepts) const;
  std::set<RoleExpr> superRoles(const RoleExpr& role) const;
  bool clashes(const std::set<BasicConcept>& type) const;

  bool operator==(const SaturatedTBox&) const = default;
};

SaturatedTBox saturate(const std::set<TBoxAxiom>& tbox);
// Writes the closure back as a TBox (used to check that re-saturation is a fixpoint).
std::set<TBoxAxiom> closureAxioms(const SaturatedTBox& sat);

struct ChaseGraph {
  Graph graph;
  std::map<Term, int> depthOf;  // anonymous terms only
  int bound = 0;
  KnowledgeBase kb;
  TermSet activeDomain;

  // Atoms over individuals only: the entailed ABox.
  Graph individualPart() const;
};

ChaseGraph chase(const KnowledgeBase& kb, int bound);
int defaultBound(const KnowledgeBase& kb, const Query& q);
Graph entailedAbox(const KnowledgeBase& kb);
bool isSatisfiable(const KnowledgeBase& kb);

}  // namespace mcan
