#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcan/term.hpp"
#include "mcan/varset.hpp"

namespace mcan {

enum class QueryKind : std::uint8_t { Triple, Select, Union, Join, Opt };

// Argument of a triple pattern: a variable or an individual constant.
class PatternTerm {
 public:
  static PatternTerm variable(Variable name);
  static PatternTerm constant(Term term);

  bool isVariable() const { return std::holds_alternative<Variable>(value_); }
  const Variable& variable() const { return std::get<Variable>(value_); }
  const Term& constant() const { return std::get<Term>(value_); }

  // "?x" or the constant's name
  std::string toString() const;

  bool operator==(const PatternTerm&) const = default;

 private:
  explicit PatternTerm(std::variant<Variable, Term> v) : value_(std::move(v)) {}
  std::variant<Variable, Term> value_;
};

struct QueryNode;

// Immutable SUJO query. Copies share the underlying node, and analysis
// results (adm, base, branches) are memoized on it.
class Query {
 public:
  static Query triple(std::string predicate, std::vector<PatternTerm> args);
  // Throws ShapeError unless projection ⊆ vars(body).
  static Query select(VarSet projection, Query body);
  static Query unionOf(Query left, Query right);
  static Query join(Query left, Query right);
  static Query opt(Query left, Query right);

  QueryKind kind() const;
  bool isTriple() const { return kind() == QueryKind::Triple; }

  // Triple patterns only.
  const std::string& predicate() const;
  const std::vector<PatternTerm>& args() const;
  // SELECT only.
  const VarSet& projection() const;
  const Query& body() const;
  // UNION / JOIN / OPT only.
  const Query& left() const;
  const Query& right() const;

  // Canonical prefix form, e.g. "OPT(Driver(?x),hasLicense(?x,?y))".
  const std::string& toString() const;

  const QueryNode& node() const { return *node_; }

  bool operator==(const Query& other) const { return toString() == other.toString(); }
  bool operator<(const Query& other) const { return toString() < other.toString(); }

 private:
  explicit Query(std::shared_ptr<const QueryNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const QueryNode> node_;
};

Query parseQuery(std::string_view text);
std::string serializeQuery(const Query& q);

VarSet vars(const Query& q);
// All variables occurring anywhere, including ones hidden by SELECT.
VarSet allVariables(const Query& q);
std::size_t triplePatternCount(const Query& q);

bool containsUnion(const Query& q);
bool containsSelect(const Query& q);
// JO: only triple patterns, JOIN and OPT.
bool isJo(const Query& q);
// A union of conjunctive queries that all project the same variables.
bool isUcqShaped(const Query& q);
// The conjunctive disjuncts of a UCQ-shaped query (throws ShapeError otherwise).
std::vector<Query> ucqDisjuncts(const Query& q);

VarSetFamily adm(const Query& q);
// Sorted by canonical text, duplicate-free, every member UNION-free.
const std::vector<Query>& branches(const Query& q);
bool isBranchOf(const Query& candidate, const Query& q);
// JO queries only; throws ShapeError otherwise.
VarSetFamily base(const Query& q);
bool isAdmissible(const Query& q, const VarSet& x);
VarSetFamily maxAdmissibleSubsets(const Query& q, const VarSet& upper);

}  // namespace mcan
