#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcan/chase.hpp"
#include "mcan/mapping.hpp"
#include "mcan/query.hpp"

namespace mcan {

enum class Semantics : std::uint8_t { Plain, CertainUcq, Regime, Canonical, Restricted, MaxAdmissible };

inline constexpr std::array<Semantics, 6> kAllSemantics = {
    Semantics::Plain,     Semantics::CertainUcq, Semantics::Regime,
    Semantics::Canonical, Semantics::Restricted, Semantics::MaxAdmissible};

// plain | certain-ucq | regime | canonical | restricted | mcan
std::string_view semanticsName(Semantics s);
std::optional<Semantics> parseSemantics(std::string_view name);

struct EvalOptions {
  std::optional<int> depth;  // defaults to defaultBound(kb, q)
};

// Each semantics exists in two forms: a pure function of (q, kb), which
// chases at the default or requested depth, and one over a prebuilt chase
// so several evaluations can share it.
MappingSet plainAns(const Query& q, const KnowledgeBase& kb);

MappingSet certAnsUcq(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet certAnsUcq(const Query& q, const ChaseGraph& can);

MappingSet erAns(const Query& q, const KnowledgeBase& kb);
MappingSet erAns(const Query& q, const ChaseGraph& can);

MappingSet canAns(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet canAns(const Query& q, const ChaseGraph& can);

MappingSet restCanAns(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet restCanAns(const Query& q, const ChaseGraph& can);

MappingSet mCanAnsSjo(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet mCanAnsSjo(const Query& q, const ChaseGraph& can);

MappingSet mCanAns(const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet mCanAns(const Query& q, const ChaseGraph& can);

// The per-branch contributions whose union is mCanAns.
std::vector<std::pair<Query, MappingSet>> mCanAnsByBranch(const Query& q, const ChaseGraph& can);

bool isApplicable(Semantics s, const Query& q);
MappingSet evaluate(Semantics s, const Query& q, const KnowledgeBase& kb, EvalOptions options = {});
MappingSet evaluate(Semantics s, const Query& q, const ChaseGraph& can);

}  // namespace mcan
