#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcan/graph.hpp"
#include "mcan/kb.hpp"
#include "mcan/mapping.hpp"
#include "mcan/query.hpp"
#include "mcan/semantics.hpp"

namespace mcan {

// ---------------------------------------------------------------- checks

enum class Verdict : std::uint8_t { Pass, Fail, NotApplicable };
std::string_view verdictName(Verdict v);

struct CheckReport {
  int requirement = 0;
  std::string semantics;
  std::string instance;
  std::string query;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<SolutionMapping> counterexamples;
  std::string detail;

  // One JSON object on a single line.
  std::string toJson() const;
};

// Evaluates requirement `requirement` (1..5) for semantics `s` on (q, kb).
// All sub-evaluations share one chase at defaultBound(kb, q) unless a depth
// is given. Requirement 2 is checked on the KB with its TBox removed.
CheckReport checkRequirement(int requirement, Semantics s, const Query& q, const KnowledgeBase& kb,
                             std::string instance = {}, EvalOptions options = {});

// Re-evaluates the requirement formula on each counterexample of a failed
// report; true iff every counterexample still witnesses the failure.
bool reverifyCounterexamples(const CheckReport& report, const Query& q, const KnowledgeBase& kb,
                             EvalOptions options = {});

// --------------------------------------------------------------- oracles

// adm(q) by membership testing over the power set of the query's
// variables. Throws std::length_error above `variableLimit` variables.
VarSetFamily bruteForceAdm(const Query& q, std::size_t variableLimit = 10);

// Certain-answer style evaluation of a UCQ by enumerating homomorphisms of
// each disjunct's atoms into g, then projecting to the answer variables.
MappingSet bruteForceCqMatches(const Query& ucq, const Graph& g);

// ------------------------------------------------------------- generator

struct SizeParams {
  int concepts = 6;
  int roles = 4;
  int individuals = 10;
  int aboxFacts = 12;
  int axioms = 6;
  int triplePatterns = 8;
  int nesting = 4;
  int variables = 6;
  // Instances whose chase at defaultBound + 3 could exceed this many
  // anonymous elements are redrawn, like unsatisfiable ones.
  std::size_t maxChaseElements = 400;

  static SizeParams zero();
};

struct Instance {
  std::string id;
  KnowledgeBase kb;
  Query query;
};

class InstanceGenerator {
 public:
  InstanceGenerator(std::uint64_t seed, SizeParams params = {});

  Instance next();
  // A query over the generator's signature, without a KB.
  Query nextQuery();
  // A JO query over the generator's signature.
  Query nextJoQuery();

  std::size_t discarded() const { return discarded_; }

 private:
  KnowledgeBase drawKb();
  Query drawQuery();
  Query drawTree(int depth, int& budget, std::vector<Variable>& used, bool joOnly);
  Query drawPattern(std::vector<Variable>& used);
  Query drawCq(const VarSet& head, int patterns);
  Query drawUcq();
  int below(int n);
  bool chance(double p);

  std::uint64_t seed_;
  SizeParams params_;
  std::mt19937_64 rng_;
  std::size_t index_ = 0;
  std::size_t discarded_ = 0;
};

std::vector<Instance> generateInstances(std::uint64_t seed, std::size_t count, SizeParams params = {});

// ---------------------------------------------------------- differential

enum class Relation : std::uint8_t { Equal, Subset, Superset, Extends, ExtendedBy, Incomparable, NotApplicable };
std::string_view relationSymbol(Relation r);
Relation relate(const MappingSet& a, const MappingSet& b);

struct DifferentialTable {
  std::vector<std::pair<Semantics, std::optional<MappingSet>>> answers;
  // relations[i][j] compares answers[i] with answers[j]
  std::vector<std::vector<Relation>> relations;

  const std::optional<MappingSet>& answer(Semantics s) const;
  std::string toString() const;
};

DifferentialTable differential(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});

// ---------------------------------------------------------------- suites

struct SuiteFailure {
  std::string instance;
  std::string description;
};

struct RequirementSuiteResult {
  std::size_t instances = 0;
  std::size_t discarded = 0;
  // checked[r] / failures for requirement r (index 1..5)
  std::array<std::size_t, 6> checked{};
  std::array<std::size_t, 6> failed{};
  std::vector<SuiteFailure> failures;
};

// Checks requirements 1..5 for mCanAns on `count` generated instances.
// Requirement 1 also compares against bruteForceCqMatches over the chase.
// Instances are checked concurrently; results merge in instance order.
RequirementSuiteResult runRequirementSuite(std::uint64_t seed, std::size_t count, SizeParams params = {});

struct OracleSuiteResult {
  std::size_t queries = 0;
  std::size_t subsetsChecked = 0;
  std::vector<SuiteFailure> failures;
};

// Base-driven analyses against bruteForceAdm on generated JO queries, plus
// the unique-minimum and branch-containment laws on generated queries.
OracleSuiteResult runAdmOracleSuite(std::uint64_t seed, std::size_t count, std::size_t maxVariables = 8);

struct StabilityResult {
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::vector<SuiteFailure> failures;
};

// Compares every canonical-model semantics at defaultBound and at
// defaultBound + extraDepth.
StabilityResult checkDepthStability(const std::vector<Instance>& instances, int extraDepth = 3);

}  // namespace mcan
