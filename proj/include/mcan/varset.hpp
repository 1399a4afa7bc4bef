#pragma once

#include <initializer_list>
#include <set>
#include <string>

namespace mcan {

using Variable = std::string;
using VarSet = std::set<Variable>;

bool isSubset(const VarSet& sub, const VarSet& super);
VarSet unite(const VarSet& a, const VarSet& b);
VarSet intersect(const VarSet& a, const VarSet& b);

// "{x,y}"
std::string toString(const VarSet& vars);

// A duplicate-free family of variable sets, kept in lexicographic order so
// that printing and iteration are deterministic.
class VarSetFamily {
 public:
  using const_iterator = std::set<VarSet>::const_iterator;

  VarSetFamily() = default;
  VarSetFamily(std::initializer_list<VarSet> sets) : sets_(sets) {}
  explicit VarSetFamily(std::set<VarSet> sets) : sets_(std::move(sets)) {}

  void insert(VarSet s) { sets_.insert(std::move(s)); }
  void insertAll(const VarSetFamily& other) { sets_.insert(other.begin(), other.end()); }
  bool contains(const VarSet& s) const { return sets_.count(s) != 0; }
  bool isSubsetOf(const VarSetFamily& other) const;

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const_iterator begin() const { return sets_.begin(); }
  const_iterator end() const { return sets_.end(); }

  // Members with no proper subset (resp. superset) in the family.
  VarSetFamily minimal() const;
  VarSetFamily maximal() const;
  // Members contained in `universe`, i.e. the family intersected with 2^universe.
  VarSetFamily within(const VarSet& universe) const;

  // "{{x},{x,y,z}}"
  std::string toString() const;

  bool operator==(const VarSetFamily&) const = default;

 private:
  std::set<VarSet> sets_;
};

}  // namespace mcan
