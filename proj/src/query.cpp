#include <cctype>

#include "mcan/errors.hpp"
#include "mcan/query.hpp"
#include "query_node.hpp"

namespace mcan {

namespace {

bool isKeyword(std::string_view name) {
  return name == "SELECT" || name == "UNION" || name == "JOIN" || name == "OPT";
}

bool isPredicateName(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return !isKeyword(name);
}

bool isVariableName(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

const char* operatorName(QueryKind kind) {
  switch (kind) {
    case QueryKind::Union: return "UNION";
    case QueryKind::Join: return "JOIN";
    case QueryKind::Opt: return "OPT";
    default: return "";
  }
}

}  // namespace

PatternTerm PatternTerm::variable(Variable name) {
  if (!isVariableName(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
  return PatternTerm(std::move(name));
}

PatternTerm PatternTerm::constant(Term term) {
  if (!term.isIndividual()) throw std::invalid_argument("query constants must be individuals");
  return PatternTerm(std::move(term));
}

std::string PatternTerm::toString() const { return isVariable() ? "?" + variable() : constant().name(); }

Query Query::triple(std::string predicate, std::vector<PatternTerm> args) {
  if (!isPredicateName(predicate)) throw ShapeError("invalid predicate name '" + predicate + "'");
  if (args.size() != 1 && args.size() != 2) throw ShapeError("triple patterns take one or two arguments");
  auto node = std::make_shared<QueryNode>();
  node->kind = QueryKind::Triple;
  node->text = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) node->text += ',';
    node->text += args[i].toString();
    if (args[i].isVariable()) node->vars.insert(args[i].variable());
  }
  node->text += ")";
  node->allVars = node->vars;
  node->triplePatterns = 1;
  node->predicate = std::move(predicate);
  node->args = std::move(args);
  return Query(std::move(node));
}

Query Query::select(VarSet projection, Query body) {
  if (!isSubset(projection, body.node().vars)) {
    throw ShapeError("SELECT variables " + mcan::toString(projection) + " are not all among the body's variables " +
                     mcan::toString(body.node().vars));
  }
  auto node = std::make_shared<QueryNode>();
  node->kind = QueryKind::Select;
  std::string list = mcan::toString(projection);
  node->text = "SELECT" + list + "(" + body.toString() + ")";
  node->vars = projection;
  node->allVars = body.node().allVars;
  node->triplePatterns = body.node().triplePatterns;
  node->hasUnion = body.node().hasUnion;
  node->hasSelect = true;
  node->projection = std::move(projection);
  node->left = std::move(body);
  return Query(std::move(node));
}

namespace {

std::shared_ptr<QueryNode> binary(QueryKind kind, Query left, Query right) {
  auto node = std::make_shared<QueryNode>();
  node->kind = kind;
  node->text = std::string(operatorName(kind)) + "(" + left.toString() + "," + right.toString() + ")";
  node->vars = unite(left.node().vars, right.node().vars);
  node->allVars = unite(left.node().allVars, right.node().allVars);
  node->triplePatterns = left.node().triplePatterns + right.node().triplePatterns;
  node->hasUnion = kind == QueryKind::Union || left.node().hasUnion || right.node().hasUnion;
  node->hasSelect = left.node().hasSelect || right.node().hasSelect;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

}  // namespace

Query Query::unionOf(Query left, Query right) {
  return Query(binary(QueryKind::Union, std::move(left), std::move(right)));
}
Query Query::join(Query left, Query right) { return Query(binary(QueryKind::Join, std::move(left), std::move(right))); }
Query Query::opt(Query left, Query right) { return Query(binary(QueryKind::Opt, std::move(left), std::move(right))); }

QueryKind Query::kind() const { return node_->kind; }

const std::string& Query::predicate() const {
  if (!isTriple()) throw ShapeError("not a triple pattern: " + toString());
  return node_->predicate;
}

const std::vector<PatternTerm>& Query::args() const {
  if (!isTriple()) throw ShapeError("not a triple pattern: " + toString());
  return node_->args;
}

const VarSet& Query::projection() const {
  if (kind() != QueryKind::Select) throw ShapeError("not a SELECT: " + toString());
  return node_->projection;
}

const Query& Query::body() const {
  if (kind() != QueryKind::Select) throw ShapeError("not a SELECT: " + toString());
  return *node_->left;
}

const Query& Query::left() const {
  if (!node_->right) throw ShapeError("not a binary operator: " + toString());
  return *node_->left;
}

const Query& Query::right() const {
  if (!node_->right) throw ShapeError("not a binary operator: " + toString());
  return *node_->right;
}

const std::string& Query::toString() const { return node_->text; }

std::string serializeQuery(const Query& q) { return q.toString(); }

VarSet vars(const Query& q) { return q.node().vars; }
VarSet allVariables(const Query& q) { return q.node().allVars; }
std::size_t triplePatternCount(const Query& q) { return q.node().triplePatterns; }
bool containsUnion(const Query& q) { return q.node().hasUnion; }
bool containsSelect(const Query& q) { return q.node().hasSelect; }
bool isJo(const Query& q) { return !q.node().hasUnion && !q.node().hasSelect; }

namespace {

bool isJoinTree(const Query& q) {
  if (q.isTriple()) return true;
  return q.kind() == QueryKind::Join && isJoinTree(q.left()) && isJoinTree(q.right());
}

bool isCq(const Query& q) {
  if (q.kind() == QueryKind::Select) return isJoinTree(q.body());
  return isJoinTree(q);
}

void collectDisjuncts(const Query& q, std::vector<Query>& out) {
  if (q.kind() == QueryKind::Union) {
    collectDisjuncts(q.left(), out);
    collectDisjuncts(q.right(), out);
  } else {
    out.push_back(q);
  }
}

}  // namespace

bool isUcqShaped(const Query& q) {
  std::vector<Query> disjuncts;
  collectDisjuncts(q, disjuncts);
  for (const Query& d : disjuncts) {
    if (!isCq(d) || vars(d) != vars(disjuncts.front())) return false;
  }
  return true;
}

std::vector<Query> ucqDisjuncts(const Query& q) {
  if (!isUcqShaped(q)) throw ShapeError("not a union of conjunctive queries: " + q.toString());
  std::vector<Query> out;
  collectDisjuncts(q, out);
  return out;
}

}  // namespace mcan
