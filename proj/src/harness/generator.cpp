#include <algorithm>
#include <map>

#include "mcan/chase.hpp"
#include "mcan/harness.hpp"

namespace mcan {

namespace {

constexpr const char* kVariablePool[] = {"x", "y", "z", "w", "u", "v", "s", "t", "p", "q"};
constexpr int kMaxAttempts = 1000;

std::string conceptName(int i) { return "C" + std::to_string(i); }
std::string roleName(int i) { return "r" + std::to_string(i); }
Term individualTerm(int i) { return Term::individual("a" + std::to_string(i)); }

// Upper bound on the anonymous elements chase(kb, bound) can create. Each
// witness for role R is typed by exists inv(R) and spawns children for the
// existentials of that type not already satisfied by its parent.
std::size_t witnessBound(const KnowledgeBase& kb, int bound, std::size_t cap) {
  SaturatedTBox sat = saturate(kb.tbox());
  std::map<std::pair<RoleExpr, int>, std::size_t> memo;
  auto subtree = [&](auto&& self, const RoleExpr& role, int remaining) -> std::size_t {
    if (remaining <= 0) return 0;
    auto key = std::make_pair(role, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t total = 1;
    std::set<RoleExpr> satisfied;
    for (const RoleExpr& s : sat.superRoles(role)) satisfied.insert(s.inverted());
    for (const BasicConcept& b : sat.entailed({BasicConcept::exists(role.inverted())})) {
      if (b.isAtomic() || satisfied.count(b.role())) continue;
      total = std::min(cap + 1, total + self(self, b.role(), remaining - 1));
    }
    memo[key] = total;
    return total;
  };

  std::map<Term, std::set<BasicConcept>> asserted;
  for (const Atom& atom : kb.abox()) {
    if (atom.arity() == 1) {
      asserted[atom.args[0]].insert(BasicConcept::atomic(atom.predicate));
    } else {
      for (const RoleExpr& s : sat.superRoles(RoleExpr{atom.predicate, false})) {
        asserted[atom.args[0]].insert(BasicConcept::exists(s));
        asserted[atom.args[1]].insert(BasicConcept::exists(s.inverted()));
      }
    }
  }
  std::size_t total = 0;
  for (const auto& [term, concepts] : asserted) {
    for (const BasicConcept& b : sat.entailed(concepts)) {
      if (!b.isAtomic()) total = std::min(cap + 1, total + subtree(subtree, b.role(), bound));
    }
  }
  return total;
}

}  // namespace

SizeParams SizeParams::zero() {
  SizeParams p;
  p.concepts = 0;
  p.roles = 0;
  p.individuals = 0;
  p.aboxFacts = 0;
  p.axioms = 0;
  p.triplePatterns = 0;
  p.nesting = 0;
  p.variables = 0;
  return p;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, SizeParams params)
    : seed_(seed), params_(params), rng_(seed) {
  params_.concepts = std::clamp(params_.concepts, 0, 6);
  params_.roles = std::clamp(params_.roles, 0, 4);
  params_.individuals = std::clamp(params_.individuals, 0, 10);
  params_.triplePatterns = std::clamp(params_.triplePatterns, 0, 8);
  params_.nesting = std::clamp(params_.nesting, 0, 4);
  params_.variables = std::clamp(params_.variables, 1, 10);
}

int InstanceGenerator::below(int n) { return n <= 0 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

bool InstanceGenerator::chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

KnowledgeBase InstanceGenerator::drawKb() {
  std::set<TBoxAxiom> tbox;
  std::set<Atom> abox;
  const int concepts = params_.concepts;
  const int roles = params_.roles;

  auto randomRole = [&] { return RoleExpr{roleName(below(roles)), chance(0.3)}; };
  auto randomBasic = [&] {
    if (roles == 0 || chance(0.55)) return BasicConcept::atomic(conceptName(below(concepts)));
    return BasicConcept::exists(randomRole());
  };

  if (concepts > 0 && roles > 0) {
    tbox.insert(ConceptInclusion{BasicConcept::atomic(conceptName(below(concepts))), BasicConcept::exists(randomRole())});
    const int extra = below(std::max(params_.axioms, 1));
    for (int i = 0; i < extra; ++i) {
      const int kind = below(100);
      if (kind < 30) {
        tbox.insert(ConceptInclusion{BasicConcept::atomic(conceptName(below(concepts))), BasicConcept::exists(randomRole())});
      } else if (kind < 50) {
        tbox.insert(ConceptInclusion{BasicConcept::exists(randomRole()), BasicConcept::atomic(conceptName(below(concepts)))});
      } else if (kind < 70) {
        BasicConcept lhs = randomBasic();
        BasicConcept rhs = randomBasic();
        if (lhs != rhs) tbox.insert(ConceptInclusion{lhs, rhs});
      } else if (kind < 88) {
        RoleExpr lhs{roleName(below(roles)), false};
        RoleExpr rhs = randomRole();
        if (lhs != rhs) tbox.insert(RoleInclusion{lhs, rhs});
      } else {
        BasicConcept lhs = randomBasic();
        BasicConcept rhs = randomBasic();
        if (lhs != rhs) tbox.insert(ConceptDisjointness{lhs, rhs});
      }
    }
  }

  if (params_.individuals > 0 && (concepts > 0 || roles > 0)) {
    // Low-numbered individuals are drawn more often so that facts share
    // terms and joins have something to match.
    auto individual = [&] { return individualTerm(below(1 + below(params_.individuals))); };
    const int half = std::max(params_.aboxFacts, 1) / 2;
    const int facts = 1 + half + below(std::max(params_.aboxFacts, 1) - half);
    for (int i = 0; i < facts; ++i) {
      if (roles == 0 || (concepts > 0 && chance(0.4))) {
        abox.insert(Atom::conceptAtom(conceptName(below(concepts)), individual()));
      } else {
        abox.insert(Atom::roleAtom(roleName(below(roles)), individual(), individual()));
      }
    }
  }
  return KnowledgeBase(std::move(tbox), std::move(abox));
}

Query InstanceGenerator::drawPattern(std::vector<Variable>& used) {
  const bool binary = params_.roles > 0 && (params_.concepts == 0 || chance(0.6));
  std::string predicate = binary ? roleName(below(params_.roles)) : conceptName(below(std::max(params_.concepts, 1)));
  const std::size_t arity = binary ? 2 : 1;
  const std::size_t anchor = static_cast<std::size_t>(below(static_cast<int>(arity)));
  const auto poolSize = static_cast<std::size_t>(params_.variables);

  auto fresh = [&]() -> Variable {
    Variable v = kVariablePool[used.size()];
    used.push_back(v);
    return v;
  };
  auto reuse = [&]() -> Variable { return used[static_cast<std::size_t>(below(static_cast<int>(used.size())))]; };

  const Variable anchored = used.empty() ? fresh() : reuse();
  std::vector<PatternTerm> args;
  for (std::size_t pos = 0; pos < arity; ++pos) {
    if (pos == anchor) {
      args.push_back(PatternTerm::variable(anchored));
      continue;
    }
    const int roll = below(100);
    if (roll < 8 && params_.individuals > 0) {
      args.push_back(PatternTerm::constant(individualTerm(below(1 + below(params_.individuals)))));
    } else if (roll < 15 || (used.size() >= poolSize && used.size() == 1)) {
      args.push_back(PatternTerm::variable(anchored));
    } else if (roll < 45 || used.size() >= poolSize) {
      Variable other = reuse();
      for (int tries = 0; other == anchored && tries < 4; ++tries) other = reuse();
      args.push_back(PatternTerm::variable(other == anchored && used.size() < poolSize ? fresh() : other));
    } else {
      args.push_back(PatternTerm::variable(used.size() < poolSize ? fresh() : reuse()));
    }
  }
  return Query::triple(std::move(predicate), std::move(args));
}

Query InstanceGenerator::drawTree(int depth, int& budget, std::vector<Variable>& used, bool joOnly) {
  if (budget <= 1 || depth >= params_.nesting || chance(0.25)) {
    --budget;
    return drawPattern(used);
  }
  const int roll = below(100);
  if (!joOnly && roll < 10) {
    Query body = drawTree(depth + 1, budget, used, joOnly);
    VarSet projection;
    for (const Variable& v : vars(body)) {
      if (chance(0.6)) projection.insert(v);
    }
    return Query::select(std::move(projection), std::move(body));
  }
  int leftBudget = 1 + below(budget - 1);
  int rightBudget = budget - leftBudget;
  Query left = drawTree(depth + 1, leftBudget, used, joOnly);
  Query right = drawTree(depth + 1, rightBudget, used, joOnly);
  budget = leftBudget + rightBudget;
  if (!joOnly && roll < 35) return Query::unionOf(std::move(left), std::move(right));
  if (roll < 65) return Query::opt(std::move(left), std::move(right));
  return Query::join(std::move(left), std::move(right));
}

Query InstanceGenerator::drawCq(const VarSet& head, int patterns) {
  std::vector<Variable> used(head.begin(), head.end());
  std::optional<Query> body;
  if (head.size() == 2 && params_.roles > 0) {
    body = Query::triple(roleName(below(params_.roles)),
                         {PatternTerm::variable(used[0]), PatternTerm::variable(used[1])});
  } else {
    std::vector<Variable> anchor{used[0]};
    body = drawPattern(anchor);
    for (const Variable& v : anchor) {
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    }
  }
  for (int i = 1; i < patterns; ++i) body = Query::join(*body, drawPattern(used));
  VarSet projection = intersect(head, vars(*body));
  return Query::select(std::move(projection), *body);
}

Query InstanceGenerator::drawUcq() {
  VarSet head = chance(0.5) && params_.roles > 0 ? VarSet{"x", "y"} : VarSet{"x"};
  int budget = std::max(params_.triplePatterns, 1);
  const int disjuncts = 1 + below(std::min(3, budget));
  std::optional<Query> out;
  for (int i = 0; i < disjuncts; ++i) {
    const int patterns = 1 + below(std::max(1, std::min(3, budget - (disjuncts - i - 1))));
    budget -= patterns;
    Query cq = drawCq(head, patterns);
    if (vars(cq) != head) continue;
    out = out ? Query::unionOf(*out, cq) : cq;
  }
  if (!out) {
    std::vector<Variable> used{"x"};
    return Query::select({"x"}, drawPattern(used));
  }
  return *out;
}

Query InstanceGenerator::drawQuery() {
  std::vector<Variable> used;
  int budget = 1 + below(std::max(params_.triplePatterns, 1));
  if (params_.triplePatterns <= 1 || params_.nesting == 0) return drawPattern(used);
  budget = std::max(budget, 3);

  const int shape = below(100);
  if (shape < 30) {
    // OPT directly under OPT, on either side.
    int inner = 2 + below(budget - 2);
    int outer = budget - inner;
    int innerLeft = 1 + below(inner - 1);
    int innerRight = inner - innerLeft;
    if (chance(0.5)) {
      Query a = drawTree(2, innerLeft, used, false);
      Query b = drawTree(2, innerRight, used, false);
      Query c = drawTree(1, outer, used, false);
      return Query::opt(Query::opt(a, b), c);
    }
    Query a = drawTree(1, outer, used, false);
    Query b = drawTree(2, innerLeft, used, false);
    Query c = drawTree(2, innerRight, used, false);
    return Query::opt(a, Query::opt(b, c));
  }
  if (shape < 50) return drawUcq();
  int left = 1 + below(budget - 1);
  int right = budget - left;
  if (shape < 70) {
    Query a = drawTree(1, left, used, false);
    Query b = drawTree(1, right, used, false);
    return Query::unionOf(a, b);
  }
  if (shape < 85) {
    Query a = drawTree(1, left, used, false);
    Query b = drawTree(1, right, used, false);
    return Query::opt(a, b);
  }
  return drawTree(0, budget, used, false);
}

Query InstanceGenerator::nextQuery() { return drawQuery(); }

Query InstanceGenerator::nextJoQuery() {
  std::vector<Variable> used;
  const int patterns = std::max(params_.triplePatterns, 1);
  int budget = std::min(patterns, 3) + below(patterns - std::min(patterns, 3) + 1);
  return drawTree(0, budget, used, true);
}

Instance InstanceGenerator::next() {
  const std::string id = "seed" + std::to_string(seed_) + "#" + std::to_string(index_++);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    KnowledgeBase kb = drawKb();
    if (!isSatisfiable(kb)) {
      ++discarded_;
      continue;
    }
    Query q = drawQuery();
    if (witnessBound(kb, defaultBound(kb, q) + 3, params_.maxChaseElements) > params_.maxChaseElements) {
      ++discarded_;
      continue;
    }
    return Instance{id, std::move(kb), std::move(q)};
  }
  throw std::runtime_error("generator could not find a usable instance after " + std::to_string(kMaxAttempts) +
                           " attempts");
}

std::vector<Instance> generateInstances(std::uint64_t seed, std::size_t count, SizeParams params) {
  InstanceGenerator gen(seed, params);
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace mcan
