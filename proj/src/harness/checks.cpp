#include <algorithm>

#include <json.hpp>

#include "mcan/harness.hpp"

namespace mcan {

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "";
}

std::string CheckReport::toJson() const {
  nlohmann::ordered_json j;
  j["requirement"] = requirement;
  j["semantics"] = semantics;
  j["instance"] = instance;
  j["query"] = query;
  j["verdict"] = verdictName(verdict);
  auto examples = nlohmann::ordered_json::array();
  for (const auto& m : counterexamples) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (const auto& [v, t] : m) object[v] = t.toString();
    examples.push_back(std::move(object));
  }
  j["counterexamples"] = std::move(examples);
  j["detail"] = detail;
  return j.dump();
}

namespace {

int boundFor(const Query& q, const KnowledgeBase& kb, const EvalOptions& options) {
  return options.depth.value_or(defaultBound(kb, q));
}

void symmetricDifference(const MappingSet& a, const MappingSet& b, std::vector<SolutionMapping>& out) {
  for (const auto& m : setDifference(a, b)) out.push_back(m);
  for (const auto& m : setDifference(b, a)) out.push_back(m);
  std::sort(out.begin(), out.end());
}

bool hasExtension(const SolutionMapping& m, const MappingSet& set) {
  return std::any_of(set.begin(), set.end(), [&](const SolutionMapping& big) { return extends(m, big); });
}

void conclude(CheckReport& report, std::string onFail) {
  report.verdict = report.counterexamples.empty() ? Verdict::Pass : Verdict::Fail;
  if (report.verdict == Verdict::Fail) report.detail = std::move(onFail);
}

}  // namespace

CheckReport checkRequirement(int requirement, Semantics s, const Query& q, const KnowledgeBase& kb,
                             std::string instance, EvalOptions options) {
  CheckReport report;
  report.requirement = requirement;
  report.semantics = std::string(semanticsName(s));
  report.instance = std::move(instance);
  report.query = q.toString();

  if (requirement < 1 || requirement > 5) throw std::invalid_argument("requirements are numbered 1 to 5");
  if (!isApplicable(s, q)) {
    report.detail = "semantics undefined for this query shape";
    return report;
  }

  switch (requirement) {
    case 1: {
      if (!isUcqShaped(q)) {
        report.detail = "query is not a union of conjunctive queries";
        return report;
      }
      ChaseGraph can = chase(kb, boundFor(q, kb, options));
      symmetricDifference(evaluate(s, q, can), certAnsUcq(q, can), report.counterexamples);
      conclude(report, "answers differ from the certain answers on these mappings");
      break;
    }
    case 2: {
      KnowledgeBase plain = kb.withoutTBox();
      symmetricDifference(evaluate(s, q, plain, options), plainAns(q, plain), report.counterexamples);
      conclude(report, "with the TBox removed, answers differ from plain SPARQL answers on these mappings");
      break;
    }
    case 3: {
      if (q.kind() != QueryKind::Opt) {
        report.detail = "query is not of the form q1 OPT q2";
        return report;
      }
      ChaseGraph can = chase(kb, boundFor(q, kb, options));
      MappingSet whole = evaluate(s, q, can);
      for (const auto& m : evaluate(s, q.left(), can)) {
        if (!hasExtension(m, whole)) report.counterexamples.push_back(m);
      }
      conclude(report, "answers to the left operand with no extension among the answers to the whole query");
      break;
    }
    case 4: {
      ChaseGraph can = chase(kb, boundFor(q, kb, options));
      const VarSetFamily admissible = adm(q);
      for (const auto& m : evaluate(s, q, can)) {
        if (!admissible.contains(m.domain())) report.counterexamples.push_back(m);
      }
      conclude(report, "answers whose domain is not in adm(q) = " + admissible.toString());
      break;
    }
    case 5: {
      if (q.kind() != QueryKind::Union) {
        report.detail = "query is not of the form q1 UNION q2";
        return report;
      }
      ChaseGraph can = chase(kb, boundFor(q, kb, options));
      MappingSet whole = evaluate(s, q, can);
      MappingSet left = evaluate(s, q.left(), can);
      MappingSet right = evaluate(s, q.right(), can);
      const VarSetFamily admLeft = adm(q.left());
      const VarSetFamily admRight = adm(q.right());
      for (const auto& m : whole) {
        bool leftViolation = !right.contains(m) && !admLeft.contains(m.domain());
        bool rightViolation = !left.contains(m) && !admRight.contains(m.domain());
        if (leftViolation || rightViolation) report.counterexamples.push_back(m);
      }
      conclude(report, "answers not explained by the operand they must come from");
      break;
    }
  }
  return report;
}

bool reverifyCounterexamples(const CheckReport& report, const Query& q, const KnowledgeBase& kb,
                             EvalOptions options) {
  if (report.verdict != Verdict::Fail || report.counterexamples.empty()) return false;
  auto s = parseSemantics(report.semantics);
  if (!s) return false;

  auto all = [&](auto&& stillFails) {
    return std::all_of(report.counterexamples.begin(), report.counterexamples.end(), stillFails);
  };

  switch (report.requirement) {
    case 1: {
      MappingSet ans = evaluate(*s, q, kb, options);
      MappingSet cert = certAnsUcq(q, kb, options);
      return all([&](const SolutionMapping& m) { return ans.contains(m) != cert.contains(m); });
    }
    case 2: {
      KnowledgeBase plain = kb.withoutTBox();
      MappingSet ans = evaluate(*s, q, plain, options);
      MappingSet expected = sparqlAns(q, Graph::fromAbox(plain));
      return all([&](const SolutionMapping& m) { return ans.contains(m) != expected.contains(m); });
    }
    case 3: {
      EvalOptions shared{options.depth.value_or(defaultBound(kb, q))};
      MappingSet left = evaluate(*s, q.left(), kb, shared);
      MappingSet whole = evaluate(*s, q, kb, shared);
      return all([&](const SolutionMapping& m) { return left.contains(m) && !hasExtension(m, whole); });
    }
    case 4: {
      MappingSet ans = evaluate(*s, q, kb, options);
      VarSetFamily admissible = bruteForceAdm(q, 20);
      return all([&](const SolutionMapping& m) { return ans.contains(m) && !admissible.contains(m.domain()); });
    }
    case 5: {
      EvalOptions shared{options.depth.value_or(defaultBound(kb, q))};
      MappingSet whole = evaluate(*s, q, kb, shared);
      MappingSet left = evaluate(*s, q.left(), kb, shared);
      MappingSet right = evaluate(*s, q.right(), kb, shared);
      VarSetFamily admLeft = bruteForceAdm(q.left(), 20);
      VarSetFamily admRight = bruteForceAdm(q.right(), 20);
      return all([&](const SolutionMapping& m) {
        if (!whole.contains(m)) return false;
        return (!right.contains(m) && !admLeft.contains(m.domain())) ||
               (!left.contains(m) && !admRight.contains(m.domain()));
      });
    }
  }
  return false;
}

}  // namespace mcan
