#include "mcan/semantics.hpp"

#include "mcan/errors.hpp"
#include "mcan/graph.hpp"

namespace mcan {

std::string_view semanticsName(Semantics s) {
  switch (s) {
    case Semantics::Plain: return "plain";
    case Semantics::CertainUcq: return "certain-ucq";
    case Semantics::Regime: return "regime";
    case Semantics::Canonical: return "canonical";
    case Semantics::Restricted: return "restricted";
    case Semantics::MaxAdmissible: return "mcan";
  }
  return "";
}

std::optional<Semantics> parseSemantics(std::string_view name) {
  for (Semantics s : kAllSemantics) {
    if (semanticsName(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

ChaseGraph chaseFor(const Query& q, const KnowledgeBase& kb, const EvalOptions& options) {
  return chase(kb, options.depth.value_or(defaultBound(kb, q)));
}

// The query operators applied over leaves that hold the certain answers of single
// triple patterns.
MappingSet regimeEval(const Query& q, const ChaseGraph& can) {
  switch (q.kind()) {
    case QueryKind::Triple:
      return restrictFilter(matchPattern(q, can.graph), can.activeDomain);
    case QueryKind::Select:
      return project(regimeEval(q.body(), can), q.projection());
    case QueryKind::Union:
      return setUnion(regimeEval(q.left(), can), regimeEval(q.right(), can));
    case QueryKind::Join:
      return join(regimeEval(q.left(), can), regimeEval(q.right(), can));
    case QueryKind::Opt:
      return leftOuterJoin(regimeEval(q.left(), can), regimeEval(q.right(), can));
  }
  return {};
}

}  // namespace

MappingSet plainAns(const Query& q, const KnowledgeBase& kb) { return sparqlAns(q, Graph::fromAbox(kb)); }

MappingSet certAnsUcq(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  if (!isUcqShaped(q)) throw ShapeError("certain answers need a union of conjunctive queries: " + q.toString());
  return certAnsUcq(q, chaseFor(q, kb, options));
}

MappingSet certAnsUcq(const Query& q, const ChaseGraph& can) {
  if (!isUcqShaped(q)) throw ShapeError("certain answers need a union of conjunctive queries: " + q.toString());
  return restrictFilter(sparqlAns(q, can.graph), can.activeDomain);
}

// A single triple pattern only ever needs the individual part of the chase,
// so the depth-0 chase suffices.
MappingSet erAns(const Query& q, const KnowledgeBase& kb) { return regimeEval(q, chase(kb, 0)); }

MappingSet erAns(const Query& q, const ChaseGraph& can) { return regimeEval(q, can); }

MappingSet canAns(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  return canAns(q, chaseFor(q, kb, options));
}

MappingSet canAns(const Query& q, const ChaseGraph& can) {
  return restrictFilter(sparqlAns(q, can.graph), can.activeDomain);
}

MappingSet restCanAns(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  return restCanAns(q, chaseFor(q, kb, options));
}

MappingSet restCanAns(const Query& q, const ChaseGraph& can) {
  return restrictProject(sparqlAns(q, can.graph), can.activeDomain);
}

MappingSet mCanAnsSjo(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  if (containsUnion(q)) throw ShapeError("mCanAnsSjo needs a UNION-free query: " + q.toString());
  return mCanAnsSjo(q, chaseFor(q, kb, options));
}

MappingSet mCanAnsSjo(const Query& q, const ChaseGraph& can) {
  if (containsUnion(q)) throw ShapeError("mCanAnsSjo needs a UNION-free query: " + q.toString());
  return otimes(restCanAns(q, can), adm(q));
}

std::vector<std::pair<Query, MappingSet>> mCanAnsByBranch(const Query& q, const ChaseGraph& can) {
  const MappingSet whole = sparqlAns(q, can.graph);
  const auto& all = branches(q);
  std::vector<MappingSet> parts(all.size());
  const auto count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (long i = 0; i < count; ++i) {
    const Query& b = all[static_cast<std::size_t>(i)];
    MappingSet viaBranch = setIntersection(whole, sparqlAns(b, can.graph));
    parts[static_cast<std::size_t>(i)] = otimes(restrictProject(viaBranch, can.activeDomain), adm(b));
  }
  std::vector<std::pair<Query, MappingSet>> out;
  for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back(all[i], std::move(parts[i]));
  return out;
}

MappingSet mCanAns(const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  return mCanAns(q, chaseFor(q, kb, options));
}

MappingSet mCanAns(const Query& q, const ChaseGraph& can) {
  MappingSet out;
  for (const auto& [branch, part] : mCanAnsByBranch(q, can)) out = setUnion(out, part);
  return out;
}

bool isApplicable(Semantics s, const Query& q) { return s != Semantics::CertainUcq || isUcqShaped(q); }

MappingSet evaluate(Semantics s, const Query& q, const KnowledgeBase& kb, EvalOptions options) {
  switch (s) {
    case Semantics::Plain: return plainAns(q, kb);
    case Semantics::Regime: return erAns(q, kb);
    case Semantics::CertainUcq: return certAnsUcq(q, kb, options);
    default: return evaluate(s, q, chaseFor(q, kb, options));
  }
}

MappingSet evaluate(Semantics s, const Query& q, const ChaseGraph& can) {
  switch (s) {
    case Semantics::Plain: return plainAns(q, can.kb);
    case Semantics::CertainUcq: return certAnsUcq(q, can);
    case Semantics::Regime: return erAns(q, can);
    case Semantics::Canonical: return canAns(q, can);
    case Semantics::Restricted: return restCanAns(q, can);
    case Semantics::MaxAdmissible: return mCanAns(q, can);
  }
  return {};
}

}  // namespace mcan
