#include "mcan/chase.hpp"

#include <algorithm>
#include <deque>

#include "mcan/errors.hpp"

namespace mcan {

namespace {

template <typename Node>
std::map<Node, std::set<Node>> reflexiveTransitiveClosure(const std::set<Node>& nodes,
                                                          const std::map<Node, std::set<Node>>& edges) {
  std::map<Node, std::set<Node>> closure;
  for (const Node& start : nodes) {
    std::set<Node>& reached = closure[start];
    std::deque<Node> todo{start};
    reached.insert(start);
    while (!todo.empty()) {
      Node current = todo.front();
      todo.pop_front();
      auto it = edges.find(current);
      if (it == edges.end()) continue;
      for (const Node& next : it->second) {
        if (reached.insert(next).second) todo.push_back(next);
      }
    }
  }
  return closure;
}

void addConceptNode(const BasicConcept& b, std::set<BasicConcept>& nodes) { nodes.insert(b); }

}  // namespace

std::set<BasicConcept> SaturatedTBox::entailed(const std::set<BasicConcept>& concepts) const {
  std::set<BasicConcept> out;
  for (const BasicConcept& b : concepts) {
    auto it = conceptClosure.find(b);
    if (it == conceptClosure.end()) {
      out.insert(b);
    } else {
      out.insert(it->second.begin(), it->second.end());
    }
  }
  return out;
}

std::set<RoleExpr> SaturatedTBox::superRoles(const RoleExpr& role) const {
  auto it = roleClosure.find(role);
  if (it == roleClosure.end()) return {role};
  return it->second;
}

bool SaturatedTBox::clashes(const std::set<BasicConcept>& type) const {
  return std::any_of(disjoint.begin(), disjoint.end(),
                     [&](const auto& pair) { return type.count(pair.first) && type.count(pair.second); });
}

SaturatedTBox saturate(const std::set<TBoxAxiom>& tbox) {
  SaturatedTBox sat;
  sat.roleNames = tboxRoleNames(tbox);

  std::set<RoleExpr> roles;
  for (const auto& name : sat.roleNames) {
    roles.insert(RoleExpr{name, false});
    roles.insert(RoleExpr{name, true});
  }
  std::map<RoleExpr, std::set<RoleExpr>> roleEdges;
  for (const TBoxAxiom& axiom : tbox) {
    if (const auto* ri = std::get_if<RoleInclusion>(&axiom)) {
      roleEdges[ri->lhs].insert(ri->rhs);
      roleEdges[ri->lhs.inverted()].insert(ri->rhs.inverted());
    }
  }
  sat.roleClosure = reflexiveTransitiveClosure(roles, roleEdges);

  std::set<BasicConcept> concepts;
  std::map<BasicConcept, std::set<BasicConcept>> conceptEdges;
  for (const RoleExpr& r : roles) addConceptNode(BasicConcept::exists(r), concepts);
  for (const TBoxAxiom& axiom : tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&axiom)) {
      addConceptNode(ci->lhs, concepts);
      addConceptNode(ci->rhs, concepts);
      conceptEdges[ci->lhs].insert(ci->rhs);
    } else if (const auto* cd = std::get_if<ConceptDisjointness>(&axiom)) {
      addConceptNode(cd->lhs, concepts);
      addConceptNode(cd->rhs, concepts);
    }
  }
  for (const auto& [role, supers] : sat.roleClosure) {
    for (const RoleExpr& s : supers) conceptEdges[BasicConcept::exists(role)].insert(BasicConcept::exists(s));
  }
  sat.conceptClosure = reflexiveTransitiveClosure(concepts, conceptEdges);

  for (const TBoxAxiom& axiom : tbox) {
    const auto* cd = std::get_if<ConceptDisjointness>(&axiom);
    if (!cd) continue;
    for (const auto& [sub1, supers1] : sat.conceptClosure) {
      if (!supers1.count(cd->lhs)) continue;
      for (const auto& [sub2, supers2] : sat.conceptClosure) {
        if (!supers2.count(cd->rhs)) continue;
        sat.disjoint.emplace(sub1, sub2);
        sat.disjoint.emplace(sub2, sub1);
      }
    }
  }
  return sat;
}

std::set<TBoxAxiom> closureAxioms(const SaturatedTBox& sat) {
  std::set<TBoxAxiom> out;
  for (const auto& [sub, supers] : sat.conceptClosure) {
    for (const BasicConcept& super : supers) out.insert(ConceptInclusion{sub, super});
  }
  for (const auto& [sub, supers] : sat.roleClosure) {
    for (const RoleExpr& super : supers) out.insert(RoleInclusion{sub, super});
  }
  for (const auto& [a, b] : sat.disjoint) {
    if (a != b) out.insert(ConceptDisjointness{a, b});
  }
  return out;
}

namespace {

// The graph under construction plus the successor indexes the restricted
// chase consults before creating a witness.
class ChaseBuilder {
 public:
  explicit ChaseBuilder(const SaturatedTBox& sat) : sat_(sat) {}

  void addRoleWithConsequences(const RoleExpr& role, const Term& from, const Term& to) {
    for (const RoleExpr& s : sat_.superRoles(role)) {
      if (s.inverse) {
        addRole(s.name, to, from);
      } else {
        addRole(s.name, from, to);
      }
    }
  }

  void addConcept(const std::string& name, const Term& t) { atoms_.insert(Atom::conceptAtom(name, t)); }

  bool hasSuccessor(const Term& t, const RoleExpr& role) const {
    const auto& index = role.inverse ? incoming_ : outgoing_;
    return index.count({role.name, t}) != 0;
  }

  // Basic concepts an individual has by virtue of its (saturated) atoms.
  std::set<BasicConcept> assertedConcepts(const Term& t) const {
    std::set<BasicConcept> out;
    for (const Atom& atom : atoms_) {
      if (atom.arity() == 1 && atom.args[0] == t) out.insert(BasicConcept::atomic(atom.predicate));
      if (atom.arity() == 2 && atom.args[0] == t) out.insert(BasicConcept::exists(RoleExpr{atom.predicate, false}));
      if (atom.arity() == 2 && atom.args[1] == t) out.insert(BasicConcept::exists(RoleExpr{atom.predicate, true}));
    }
    return out;
  }

  std::vector<Atom> release() { return {atoms_.begin(), atoms_.end()}; }

 private:
  void addRole(const std::string& name, const Term& from, const Term& to) {
    atoms_.insert(Atom::roleAtom(name, from, to));
    outgoing_.emplace(name, from);
    incoming_.emplace(name, to);
  }

  const SaturatedTBox& sat_;
  std::set<Atom> atoms_;
  std::set<std::pair<std::string, Term>> outgoing_;
  std::set<std::pair<std::string, Term>> incoming_;
};

// Roles whose witnesses would also serve other roles come first: sorting
// by descending number of super-roles puts every role before its strict
// super-roles, and ties fall back to lexicographic order.
std::vector<RoleExpr> expansionOrder(const std::set<BasicConcept>& type, const SaturatedTBox& sat) {
  std::vector<RoleExpr> roles;
  for (const BasicConcept& b : type) {
    if (!b.isAtomic()) roles.push_back(b.role());
  }
  std::sort(roles.begin(), roles.end());
  std::stable_sort(roles.begin(), roles.end(), [&](const RoleExpr& a, const RoleExpr& b) {
    return sat.superRoles(a).size() > sat.superRoles(b).size();
  });
  return roles;
}

std::string witnessName(const Term& parent, const RoleExpr& role) {
  std::string prefix = parent.isIndividual() ? "_:" + parent.name() : parent.name();
  return prefix + "|" + role.toString();
}

struct Seeded {
  ChaseBuilder builder;
  std::vector<std::pair<Term, std::set<BasicConcept>>> individuals;
};

// Role-saturates the ABox and types every individual.
Seeded seed(const KnowledgeBase& kb, const SaturatedTBox& sat) {
  Seeded s{ChaseBuilder(sat), {}};
  for (const Atom& atom : kb.abox()) {
    if (atom.arity() == 1) {
      s.builder.addConcept(atom.predicate, atom.args[0]);
    } else {
      s.builder.addRoleWithConsequences(RoleExpr{atom.predicate, false}, atom.args[0], atom.args[1]);
    }
  }
  for (const Term& c : activeDomain(kb)) {
    s.individuals.emplace_back(c, sat.entailed(s.builder.assertedConcepts(c)));
  }
  for (const auto& [c, type] : s.individuals) {
    for (const BasicConcept& b : type) {
      if (b.isAtomic()) s.builder.addConcept(b.name(), c);
    }
  }
  return s;
}

}  // namespace

Graph ChaseGraph::individualPart() const {
  return graph.filterTerms([](const Term& t) { return t.isIndividual(); });
}

bool isSatisfiable(const KnowledgeBase& kb) {
  SaturatedTBox sat = saturate(kb.tbox());
  if (sat.disjoint.empty()) return true;
  Seeded s = seed(kb, sat);

  // A witness created for exists R has exactly the type entailed by
  // exists inv(R), so the witness part of the chase is covered by walking
  // generating roles instead of materializing elements.
  std::set<RoleExpr> frontier;
  for (const auto& [c, type] : s.individuals) {
    if (sat.clashes(type)) return false;
    for (const RoleExpr& r : expansionOrder(type, sat)) frontier.insert(r);
  }
  std::set<RoleExpr> seen;
  const int horizon = 2 * static_cast<int>(sat.roleNames.size()) + 1;
  for (int depth = 1; depth <= horizon && !frontier.empty(); ++depth) {
    std::set<RoleExpr> next;
    for (const RoleExpr& r : frontier) {
      if (!seen.insert(r).second) continue;
      auto type = sat.entailed({BasicConcept::exists(r.inverted())});
      if (sat.clashes(type)) return false;
      for (const RoleExpr& child : expansionOrder(type, sat)) next.insert(child);
    }
    frontier = std::move(next);
  }
  return true;
}

ChaseGraph chase(const KnowledgeBase& kb, int bound) {
  if (bound < 0) throw std::invalid_argument("chase depth must be non-negative");
  if (!isSatisfiable(kb)) throw UnsatisfiableKbError("the knowledge base is unsatisfiable");

  SaturatedTBox sat = saturate(kb.tbox());
  Seeded s = seed(kb, sat);
  ChaseGraph out;
  out.bound = bound;
  out.kb = kb;
  out.activeDomain = activeDomain(kb);

  struct Pending {
    Term element;
    std::set<BasicConcept> type;
    int depth;
  };
  std::deque<Pending> queue;
  for (auto& [c, type] : s.individuals) queue.push_back({c, std::move(type), 0});

  while (!queue.empty()) {
    Pending e = std::move(queue.front());
    queue.pop_front();
    if (e.depth >= bound) continue;
    for (const RoleExpr& role : expansionOrder(e.type, sat)) {
      if (s.builder.hasSuccessor(e.element, role)) continue;
      Term w = Term::anonymous(witnessName(e.element, role));
      s.builder.addRoleWithConsequences(role, e.element, w);
      auto type = sat.entailed({BasicConcept::exists(role.inverted())});
      for (const BasicConcept& b : type) {
        if (b.isAtomic()) s.builder.addConcept(b.name(), w);
      }
      out.depthOf.emplace(w, e.depth + 1);
      queue.push_back({w, std::move(type), e.depth + 1});
    }
  }
  out.graph = Graph(s.builder.release());
  return out;
}

int defaultBound(const KnowledgeBase& kb, const Query& q) {
  return 2 * static_cast<int>(tboxRoleNames(kb.tbox()).size()) + static_cast<int>(triplePatternCount(q)) + 1;
}

Graph entailedAbox(const KnowledgeBase& kb) { return chase(kb, 0).individualPart(); }

}  // namespace mcan
