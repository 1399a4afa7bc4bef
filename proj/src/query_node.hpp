#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mcan/query.hpp"

namespace mcan {

struct QueryNode {
  QueryKind kind = QueryKind::Triple;
  std::string predicate;
  std::vector<PatternTerm> args;
  VarSet projection;
  // SELECT keeps its body in `left`.
  std::optional<Query> left;
  std::optional<Query> right;

  std::string text;
  VarSet vars;
  VarSet allVars;
  std::size_t triplePatterns = 0;
  bool hasUnion = false;
  bool hasSelect = false;

  mutable std::once_flag admOnce;
  mutable VarSetFamily admCache;
  mutable std::once_flag baseOnce;
  mutable VarSetFamily baseCache;
  mutable std::once_flag branchOnce;
  mutable std::vector<Query> branchCache;
};

}  // namespace mcan
