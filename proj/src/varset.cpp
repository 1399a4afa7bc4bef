#include "mcan/varset.hpp"

#include <algorithm>
#include <iterator>

namespace mcan {

bool isSubset(const VarSet& sub, const VarSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VarSet unite(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VarSet intersect(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string toString(const VarSet& vars) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : vars) {
    if (!first) out += ',';
    out += v;
    first = false;
  }
  return out + "}";
}

bool VarSetFamily::isSubsetOf(const VarSetFamily& other) const {
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end());
}

VarSetFamily VarSetFamily::minimal() const {
  VarSetFamily out;
  for (const auto& s : sets_) {
    bool hasSmaller = std::any_of(sets_.begin(), sets_.end(), [&](const VarSet& t) {
      return t.size() < s.size() && isSubset(t, s);
    });
    if (!hasSmaller) out.insert(s);
  }
  return out;
}

VarSetFamily VarSetFamily::maximal() const {
  VarSetFamily out;
  for (const auto& s : sets_) {
    bool hasLarger = std::any_of(sets_.begin(), sets_.end(), [&](const VarSet& t) {
      return t.size() > s.size() && isSubset(s, t);
    });
    if (!hasLarger) out.insert(s);
  }
  return out;
}

VarSetFamily VarSetFamily::within(const VarSet& universe) const {
  VarSetFamily out;
  for (const auto& s : sets_) {
    if (isSubset(s, universe)) out.insert(s);
  }
  return out;
}

std::string VarSetFamily::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& s : sets_) {
    if (!first) out += ',';
    out += mcan::toString(s);
    first = false;
  }
  return out + "}";
}

}  // namespace mcan
