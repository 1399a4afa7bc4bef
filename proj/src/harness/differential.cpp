#include <iomanip>
#include <sstream>

#include "mcan/harness.hpp"

namespace mcan {

std::string_view relationSymbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "=";
    case Relation::Subset: return "<";
    case Relation::Superset: return ">";
    case Relation::Extends: return "<=g";
    case Relation::ExtendedBy: return ">=g";
    case Relation::Incomparable: return "incomparable";
    case Relation::NotApplicable: return "n/a";
  }
  return "";
}

// Extends: every mapping of a is extended by one of b.
Relation relate(const MappingSet& a, const MappingSet& b) {
  if (a == b) return Relation::Equal;
  if (isSubsetOf(a, b)) return Relation::Subset;
  if (isSubsetOf(b, a)) return Relation::Superset;
  if (setExtends(a, b)) return Relation::Extends;
  if (setExtends(b, a)) return Relation::ExtendedBy;
  return Relation::Incomparable;
}

const std::optional<MappingSet>& DifferentialTable::answer(Semantics s) const {
  for (const auto& [semantics, set] : answers) {
    if (semantics == s) return set;
  }
  static const std::optional<MappingSet> none;
  return none;
}

std::string DifferentialTable::toString() const {
  std::ostringstream out;
  for (const auto& [s, set] : answers) {
    out << std::left << std::setw(12) << semanticsName(s) << (set ? set->toString() : "n/a") << "\n";
  }
  out << "\n" << std::setw(12) << "";
  for (const auto& [s, set] : answers) out << std::setw(13) << semanticsName(s);
  out << "\n";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    out << std::setw(12) << semanticsName(answers[i].first);
    for (std::size_t j = 0; j < answers.size(); ++j) out << std::setw(13) << relationSymbol(relations[i][j]);
    out << "\n";
  }
  return out.str();
}

DifferentialTable differential(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  ChaseGraph can = chase(kb, options.depth.value_or(defaultBound(kb, q)));
  DifferentialTable table;
  for (Semantics s : kAllSemantics) {
    if (isApplicable(s, q)) {
      table.answers.emplace_back(s, evaluate(s, q, can));
    } else {
      table.answers.emplace_back(s, std::nullopt);
    }
  }
  const std::size_t n = table.answers.size();
  table.relations.assign(n, std::vector<Relation>(n, Relation::NotApplicable));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = table.answers[i].second;
      const auto& b = table.answers[j].second;
      if (a && b) table.relations[i][j] = relate(*a, *b);
    }
  }
  return table;
}

}  // namespace mcan
