#include <algorithm>

#include "mcan/harness.hpp"

namespace mcan {

namespace {

struct InstanceOutcome {
  std::array<std::size_t, 6> checked{};
  std::array<std::size_t, 6> failed{};
  std::vector<SuiteFailure> failures;
};

InstanceOutcome checkInstance(const Instance& in) {
  InstanceOutcome out;
  try {
    for (int req = 1; req <= 5; ++req) {
      CheckReport report = checkRequirement(req, Semantics::MaxAdmissible, in.query, in.kb, in.id);
      if (report.verdict == Verdict::NotApplicable) continue;
      ++out.checked[static_cast<std::size_t>(req)];
      if (report.verdict == Verdict::Fail) {
        ++out.failed[static_cast<std::size_t>(req)];
        out.failures.push_back({in.id, report.toJson()});
      }
    }
    if (isUcqShaped(in.query)) {
      ChaseGraph can = chase(in.kb, defaultBound(in.kb, in.query));
      MappingSet oracle = restrictFilter(bruteForceCqMatches(in.query, can.graph), can.activeDomain);
      MappingSet cert = certAnsUcq(in.query, can);
      MappingSet ours = mCanAns(in.query, can);
      if (oracle != cert || oracle != ours) {
        ++out.failed[1];
        out.failures.push_back({in.id, "oracle " + oracle.toString() + " certain " + cert.toString() + " mcan " +
                                           ours.toString() + " for " + in.query.toString()});
      }
    }
  } catch (const std::exception& e) {
    out.failures.push_back({in.id, std::string("exception: ") + e.what()});
  }
  return out;
}

VarSetFamily unionClosure(const VarSetFamily& generators) {
  VarSetFamily closed = generators;
  bool grew = true;
  while (grew) {
    grew = false;
    VarSetFamily next = closed;
    for (const VarSet& a : closed) {
      for (const VarSet& b : generators) next.insert(unite(a, b));
    }
    if (next.size() != closed.size()) {
      closed = std::move(next);
      grew = true;
    }
  }
  return closed;
}

std::vector<VarSet> powerSet(const VarSet& universe) {
  std::vector<Variable> items(universe.begin(), universe.end());
  std::vector<VarSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    VarSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

RequirementSuiteResult runRequirementSuite(std::uint64_t seed, std::size_t count, SizeParams params) {
  InstanceGenerator gen(seed, params);
  std::vector<Instance> instances;
  instances.reserve(count);
  for (std::size_t i = 0; i < count; ++i) instances.push_back(gen.next());

  std::vector<InstanceOutcome> outcomes(count);
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = checkInstance(instances[static_cast<std::size_t>(i)]);

  RequirementSuiteResult result;
  result.instances = count;
  result.discarded = gen.discarded();
  for (auto& o : outcomes) {
    for (std::size_t r = 1; r <= 5; ++r) {
      result.checked[r] += o.checked[r];
      result.failed[r] += o.failed[r];
    }
    for (auto& f : o.failures) result.failures.push_back(std::move(f));
  }
  return result;
}

OracleSuiteResult runAdmOracleSuite(std::uint64_t seed, std::size_t count, std::size_t maxVariables) {
  SizeParams params;
  params.variables = static_cast<int>(maxVariables);
  InstanceGenerator gen(seed, params);
  OracleSuiteResult result;

  auto fail = [&](const Query& q, std::string what) { result.failures.push_back({q.toString(), std::move(what)}); };

  for (std::size_t i = 0; i < count; ++i) {
    Query q = gen.nextJoQuery();
    ++result.queries;
    const VarSetFamily brute = bruteForceAdm(q);
    const VarSetFamily b = base(q);
    if (adm(q) != brute) fail(q, "adm " + adm(q).toString() + " vs brute force " + brute.toString());
    if (unionClosure(b) != brute) fail(q, "unions of base " + b.toString() + " vs brute force " + brute.toString());
    if (b.minimal().size() != 1) fail(q, "base has minimal elements " + b.minimal().toString());
    for (const VarSet& x : powerSet(vars(q))) {
      ++result.subsetsChecked;
      if (isAdmissible(q, x) != brute.contains(x)) fail(q, "isAdmissible disagrees on " + toString(x));
      VarSetFamily expected = brute.within(x).maximal();
      if (maxAdmissibleSubsets(q, x) != expected) {
        fail(q, "maxAdmissibleSubsets(" + toString(x) + ") = " + maxAdmissibleSubsets(q, x).toString() +
                    ", expected " + expected.toString());
      }
    }

    Query general = gen.nextQuery();
    const VarSetFamily whole = adm(general);
    if (allVariables(general).size() <= 10 && whole != bruteForceAdm(general)) {
      fail(general, "adm disagrees with brute force");
    }
    for (const Query& branch : branches(general)) {
      if (!adm(branch).isSubsetOf(whole)) fail(general, "adm of branch " + branch.toString() + " not contained");
    }
  }
  return result;
}

StabilityResult checkDepthStability(const std::vector<Instance>& instances, int extraDepth) {
  static constexpr Semantics kCanonicalModelSemantics[] = {Semantics::CertainUcq, Semantics::Canonical,
                                                           Semantics::Restricted, Semantics::MaxAdmissible};
  std::vector<StabilityResult> partial(instances.size());
  const auto n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const Instance& in = instances[static_cast<std::size_t>(i)];
    StabilityResult& out = partial[static_cast<std::size_t>(i)];
    try {
      const int bound = defaultBound(in.kb, in.query);
      ChaseGraph shallow = chase(in.kb, bound);
      ChaseGraph deep = chase(in.kb, bound + extraDepth);
      for (Semantics s : kCanonicalModelSemantics) {
        if (!isApplicable(s, in.query)) continue;
        ++out.comparisons;
        MappingSet a = evaluate(s, in.query, shallow);
        MappingSet b = evaluate(s, in.query, deep);
        if (a != b) {
          out.failures.push_back({in.id, std::string(semanticsName(s)) + ": " + a.toString() + " at depth " +
                                             std::to_string(bound) + " vs " + b.toString()});
        }
      }
    } catch (const std::exception& e) {
      out.failures.push_back({in.id, std::string("exception: ") + e.what()});
    }
  }
  StabilityResult result;
  result.instances = instances.size();
  for (auto& p : partial) {
    result.comparisons += p.comparisons;
    for (auto& f : p.failures) result.failures.push_back(std::move(f));
  }
  return result;
}

}  // namespace mcan
