#include "mcan/mapping.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcan/kernels.hpp"

namespace mcan {

SolutionMapping::SolutionMapping(std::initializer_list<Binding> bindings)
    : SolutionMapping(std::vector<Binding>(bindings)) {}

SolutionMapping::SolutionMapping(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
  std::sort(bindings_.begin(), bindings_.end(),
            [](const Binding& a, const Binding& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < bindings_.size(); ++i) {
    if (bindings_[i - 1].first == bindings_[i].first) {
      throw std::invalid_argument("variable '" + bindings_[i].first + "' bound twice");
    }
  }
}

const Term* SolutionMapping::find(const Variable& v) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), v,
                             [](const Binding& b, const Variable& key) { return b.first < key; });
  return it != bindings_.end() && it->first == v ? &it->second : nullptr;
}

VarSet SolutionMapping::domain() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) out.insert(out.end(), v);
  return out;
}

TermSet SolutionMapping::range() const {
  TermSet out;
  for (const auto& [v, t] : bindings_) out.insert(t);
  return out;
}

SolutionMapping SolutionMapping::restrictTo(const VarSet& vars) const {
  std::vector<Binding> kept;
  for (const auto& b : bindings_) {
    if (vars.count(b.first)) kept.push_back(b);
  }
  return SolutionMapping(Sorted{}, std::move(kept));
}

SolutionMapping SolutionMapping::restrictToRange(const TermSet& terms) const {
  std::vector<Binding> kept;
  for (const auto& b : bindings_) {
    if (terms.count(b.second)) kept.push_back(b);
  }
  return SolutionMapping(Sorted{}, std::move(kept));
}

bool SolutionMapping::rangeWithin(const TermSet& terms) const {
  return std::all_of(bindings_.begin(), bindings_.end(), [&](const Binding& b) { return terms.count(b.second) != 0; });
}

std::string SolutionMapping::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i) out += ", ";
    out += bindings_[i].first + "->" + bindings_[i].second.toString();
  }
  return out + "}";
}

std::strong_ordering SolutionMapping::operator<=>(const SolutionMapping& other) const {
  auto byVariable = std::lexicographical_compare_three_way(
      bindings_.begin(), bindings_.end(), other.bindings_.begin(), other.bindings_.end(),
      [](const Binding& a, const Binding& b) { return a.first <=> b.first; });
  if (byVariable != 0) return byVariable;
  return std::lexicographical_compare_three_way(
      bindings_.begin(), bindings_.end(), other.bindings_.begin(), other.bindings_.end(),
      [](const Binding& a, const Binding& b) { return a.second <=> b.second; });
}

bool compatible(const SolutionMapping& a, const SolutionMapping& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      if (i->second != j->second) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

std::optional<SolutionMapping> merge(const SolutionMapping& a, const SolutionMapping& b) {
  std::vector<Binding> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      if (i->second != j->second) return std::nullopt;
      out.push_back(*i++);
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return SolutionMapping(SolutionMapping::Sorted{}, std::move(out));
}

bool extends(const SolutionMapping& a, const SolutionMapping& b) {
  if (a.size() > b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Binding& binding) {
    const Term* t = b.find(binding.first);
    return t && *t == binding.second;
  });
}

MappingSet::MappingSet(std::initializer_list<SolutionMapping> mappings)
    : MappingSet(fromUnsorted(std::vector<SolutionMapping>(mappings))) {}

MappingSet MappingSet::fromUnsorted(std::vector<SolutionMapping> mappings) {
  std::sort(mappings.begin(), mappings.end());
  mappings.erase(std::unique(mappings.begin(), mappings.end()), mappings.end());
  MappingSet out;
  out.items_ = std::move(mappings);
  return out;
}

MappingSet MappingSet::unit() { return MappingSet{SolutionMapping{}}; }

bool MappingSet::contains(const SolutionMapping& m) const {
  return std::binary_search(items_.begin(), items_.end(), m);
}

std::string MappingSet::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += items_[i].toString();
  }
  return out + "}";
}

MappingSet setUnion(const MappingSet& a, const MappingSet& b) {
  std::vector<SolutionMapping> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet setIntersection(const MappingSet& a, const MappingSet& b) {
  std::vector<SolutionMapping> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet setDifference(const MappingSet& a, const MappingSet& b) {
  std::vector<SolutionMapping> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return MappingSet::fromUnsorted(std::move(out));
}

bool isSubsetOf(const MappingSet& a, const MappingSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

MappingSet join(const MappingSet& a, const MappingSet& b) { return kernels::parallelJoin(a, b); }

MappingSet diff(const MappingSet& a, const MappingSet& b) { return kernels::parallelDiff(a, b); }

MappingSet leftOuterJoin(const MappingSet& a, const MappingSet& b) { return setUnion(join(a, b), diff(a, b)); }

MappingSet project(const MappingSet& set, const VarSet& vars) {
  std::vector<SolutionMapping> out;
  out.reserve(set.size());
  for (const auto& m : set) out.push_back(m.restrictTo(vars));
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet restrictFilter(const MappingSet& set, const TermSet& terms) {
  std::vector<SolutionMapping> out;
  for (const auto& m : set) {
    if (m.rangeWithin(terms)) out.push_back(m);
  }
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet restrictProject(const MappingSet& set, const TermSet& terms) {
  std::vector<SolutionMapping> out;
  out.reserve(set.size());
  for (const auto& m : set) out.push_back(m.restrictToRange(terms));
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet otimes(const MappingSet& set, const VarSetFamily& family) {
  std::vector<SolutionMapping> out;
  for (const auto& m : set) {
    for (const VarSet& x : family.within(m.domain()).maximal()) out.push_back(m.restrictTo(x));
  }
  return MappingSet::fromUnsorted(std::move(out));
}

bool setExtends(const MappingSet& a, const MappingSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const SolutionMapping& small) {
    return std::any_of(b.begin(), b.end(), [&](const SolutionMapping& big) { return extends(small, big); });
  });
}

}  // namespace mcan
