#include <algorithm>

#include "mcan/errors.hpp"
#include "mcan/query.hpp"
#include "query_node.hpp"

namespace mcan {

namespace {

VarSetFamily pairwiseUnions(const VarSetFamily& a, const VarSetFamily& b) {
  VarSetFamily out;
  for (const VarSet& x : a) {
    for (const VarSet& y : b) out.insert(unite(x, y));
  }
  return out;
}

VarSetFamily computeAdm(const Query& q) {
  switch (q.kind()) {
    case QueryKind::Triple:
      return VarSetFamily{vars(q)};
    case QueryKind::Select: {
      VarSetFamily out;
      for (const VarSet& x : adm(q.body())) out.insert(intersect(x, q.projection()));
      return out;
    }
    case QueryKind::Join:
      return pairwiseUnions(adm(q.left()), adm(q.right()));
    case QueryKind::Opt: {
      VarSetFamily out = adm(q.left());
      out.insertAll(pairwiseUnions(adm(q.left()), adm(q.right())));
      return out;
    }
    case QueryKind::Union: {
      VarSetFamily out = adm(q.left());
      out.insertAll(adm(q.right()));
      return out;
    }
  }
  return {};
}

std::vector<Query> computeBranches(const Query& q) {
  std::vector<Query> out;
  switch (q.kind()) {
    case QueryKind::Triple:
      out.push_back(q);
      break;
    case QueryKind::Select:
      // A branch may lose some projected variables (the other UNION operand
      // bound them); projecting onto the missing ones is a no-op, so drop them.
      for (const Query& b : branches(q.body())) out.push_back(Query::select(intersect(q.projection(), vars(b)), b));
      break;
    case QueryKind::Join:
    case QueryKind::Opt:
      for (const Query& l : branches(q.left())) {
        for (const Query& r : branches(q.right())) {
          out.push_back(q.kind() == QueryKind::Join ? Query::join(l, r) : Query::opt(l, r));
        }
      }
      break;
    case QueryKind::Union: {
      const auto& l = branches(q.left());
      const auto& r = branches(q.right());
      out.insert(out.end(), l.begin(), l.end());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Joining two JO queries: every base element of one side combined with a
// minimal base element of the other.
VarSetFamily joinBase(const VarSetFamily& left, const VarSetFamily& right) {
  VarSetFamily out = pairwiseUnions(left.minimal(), right);
  out.insertAll(pairwiseUnions(left, right.minimal()));
  return out;
}

VarSetFamily computeBase(const Query& q) {
  switch (q.kind()) {
    case QueryKind::Triple:
      return VarSetFamily{vars(q)};
    case QueryKind::Join:
      return joinBase(base(q.left()), base(q.right()));
    case QueryKind::Opt: {
      VarSetFamily out = base(q.left());
      out.insertAll(joinBase(base(q.left()), base(q.right())));
      return out;
    }
    default:
      throw ShapeError("base() is defined for JOIN/OPT queries only: " + q.toString());
  }
}

void requireJo(const Query& q, const char* op) {
  if (!isJo(q)) throw ShapeError(std::string(op) + " needs a query without SELECT and UNION: " + q.toString());
}

}  // namespace

VarSetFamily adm(const Query& q) {
  const QueryNode& n = q.node();
  std::call_once(n.admOnce, [&] { n.admCache = computeAdm(q); });
  return n.admCache;
}

const std::vector<Query>& branches(const Query& q) {
  const QueryNode& n = q.node();
  std::call_once(n.branchOnce, [&] { n.branchCache = computeBranches(q); });
  return n.branchCache;
}

bool isBranchOf(const Query& candidate, const Query& q) {
  const auto& all = branches(q);
  return std::binary_search(all.begin(), all.end(), candidate);
}

VarSetFamily base(const Query& q) {
  requireJo(q, "base()");
  const QueryNode& n = q.node();
  std::call_once(n.baseOnce, [&] { n.baseCache = computeBase(q); });
  return n.baseCache;
}

bool isAdmissible(const Query& q, const VarSet& x) {
  requireJo(q, "isAdmissible()");
  const VarSetFamily family = base(q);
  VarSet covered;
  bool anyInside = false;
  for (const VarSet& b : family) {
    if (isSubset(b, x)) {
      covered = unite(covered, b);
      anyInside = true;
    }
  }
  if (!anyInside || covered != x) return false;
  const VarSetFamily least = family.minimal();
  return std::all_of(least.begin(), least.end(), [&](const VarSet& m) { return isSubset(m, x); });
}

VarSetFamily maxAdmissibleSubsets(const Query& q, const VarSet& upper) {
  requireJo(q, "maxAdmissibleSubsets()");
  const VarSetFamily family = base(q);
  // Admissible sets of a JO query are closed under union, so the candidate
  // is the union of every base element that fits under the upper bound.
  VarSet candidate;
  bool anyInside = false;
  for (const VarSet& b : family) {
    if (isSubset(b, upper)) {
      candidate = unite(candidate, b);
      anyInside = true;
    }
  }
  if (!anyInside || !isAdmissible(q, candidate)) return {};
  for (const VarSet& b : family) {
    VarSet grown = unite(candidate, b);
    if (grown.size() > candidate.size() && isSubset(grown, upper)) return {};
  }
  return VarSetFamily{candidate};
}

}  // namespace mcan
