#include <map>
#include <stdexcept>
#include <vector>

#include "mcan/errors.hpp"
#include "mcan/harness.hpp"

namespace mcan {

namespace {

using Mask = std::uint32_t;

// A family of variable sets as a membership table over the power set of a
// fixed variable list.
class PowerSetFamily {
 public:
  explicit PowerSetFamily(std::size_t variables) : members_(std::size_t{1} << variables, false) {}

  void add(Mask m) { members_[m] = true; }
  bool has(Mask m) const { return members_[m]; }

  std::vector<Mask> list() const {
    std::vector<Mask> out;
    for (Mask m = 0; m < members_.size(); ++m) {
      if (members_[m]) out.push_back(m);
    }
    return out;
  }

 private:
  std::vector<bool> members_;
};

class AdmEnumerator {
 public:
  explicit AdmEnumerator(std::vector<Variable> universe) : universe_(std::move(universe)) {}

  PowerSetFamily family(const Query& q) const {
    PowerSetFamily out(universe_.size());
    switch (q.kind()) {
      case QueryKind::Triple:
        out.add(maskOf(vars(q)));
        break;
      case QueryKind::Select: {
        Mask keep = maskOf(q.projection());
        for (Mask m : family(q.body()).list()) out.add(m & keep);
        break;
      }
      case QueryKind::Join:
        addUnions(family(q.left()), family(q.right()), out);
        break;
      case QueryKind::Opt: {
        PowerSetFamily left = family(q.left());
        for (Mask m : left.list()) out.add(m);
        addUnions(left, family(q.right()), out);
        break;
      }
      case QueryKind::Union:
        for (Mask m : family(q.left()).list()) out.add(m);
        for (Mask m : family(q.right()).list()) out.add(m);
        break;
    }
    return out;
  }

  VarSet setOf(Mask m) const {
    VarSet out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (m & (Mask{1} << i)) out.insert(universe_[i]);
    }
    return out;
  }

 private:
  Mask maskOf(const VarSet& s) const {
    Mask m = 0;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (s.count(universe_[i])) m |= Mask{1} << i;
    }
    return m;
  }

  static void addUnions(const PowerSetFamily& a, const PowerSetFamily& b, PowerSetFamily& out) {
    const auto right = b.list();
    for (Mask x : a.list()) {
      for (Mask y : right) out.add(x | y);
    }
  }

  std::vector<Variable> universe_;
};

void collectAtoms(const Query& q, std::vector<Query>& out) {
  if (q.isTriple()) {
    out.push_back(q);
  } else {
    collectAtoms(q.left(), out);
    collectAtoms(q.right(), out);
  }
}

// Backtracking search for total matches of `atoms` in `g`.
class Matcher {
 public:
  Matcher(const std::vector<Query>& atoms, const Graph& g, const VarSet& head, std::vector<SolutionMapping>& sink)
      : atoms_(atoms), g_(g), head_(head), sink_(sink) {}

  void run() { extend(0); }

 private:
  void extend(std::size_t next) {
    if (next == atoms_.size()) {
      std::vector<Binding> answer;
      for (const auto& [v, t] : assignment_) {
        if (head_.count(v)) answer.emplace_back(v, t);
      }
      sink_.emplace_back(std::move(answer));
      return;
    }
    const Query& pattern = atoms_[next];
    for (std::size_t index : g_.withPredicate(pattern.predicate())) {
      const Atom& atom = g_.atoms()[index];
      if (atom.arity() != pattern.args().size()) continue;
      std::vector<Variable> bound;
      if (unify(pattern, atom, bound)) extend(next + 1);
      for (const Variable& v : bound) assignment_.erase(v);
    }
  }

  bool unify(const Query& pattern, const Atom& atom, std::vector<Variable>& bound) {
    for (std::size_t i = 0; i < atom.arity(); ++i) {
      const PatternTerm& arg = pattern.args()[i];
      if (!arg.isVariable()) {
        if (arg.constant() != atom.args[i]) return false;
        continue;
      }
      auto it = assignment_.find(arg.variable());
      if (it == assignment_.end()) {
        assignment_.emplace(arg.variable(), atom.args[i]);
        bound.push_back(arg.variable());
      } else if (it->second != atom.args[i]) {
        return false;
      }
    }
    return true;
  }

  const std::vector<Query>& atoms_;
  const Graph& g_;
  const VarSet& head_;
  std::vector<SolutionMapping>& sink_;
  std::map<Variable, Term> assignment_;
};

}  // namespace

VarSetFamily bruteForceAdm(const Query& q, std::size_t variableLimit) {
  VarSet all = allVariables(q);
  if (all.size() > variableLimit || all.size() > 20) {
    throw std::length_error("bruteForceAdm: " + std::to_string(all.size()) + " variables exceed the limit of " +
                            std::to_string(variableLimit));
  }
  AdmEnumerator enumerator(std::vector<Variable>(all.begin(), all.end()));
  VarSetFamily out;
  for (Mask m : enumerator.family(q).list()) out.insert(enumerator.setOf(m));
  return out;
}

MappingSet bruteForceCqMatches(const Query& ucq, const Graph& g) {
  std::vector<SolutionMapping> answers;
  for (const Query& disjunct : ucqDisjuncts(ucq)) {
    const Query& body = disjunct.kind() == QueryKind::Select ? disjunct.body() : disjunct;
    std::vector<Query> atoms;
    collectAtoms(body, atoms);
    VarSet head = vars(disjunct);
    Matcher(atoms, g, head, answers).run();
  }
  return MappingSet::fromUnsorted(std::move(answers));
}

}  // namespace mcan
