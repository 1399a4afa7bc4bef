#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcan/term.hpp"
#include "mcan/varset.hpp"

namespace mcan {

using Binding = std::pair<Variable, Term>;

// A finite partial function from variables to terms. Bindings are kept
// sorted by variable name.
class SolutionMapping {
 public:
  SolutionMapping() = default;
  SolutionMapping(std::initializer_list<Binding> bindings);
  // Throws std::invalid_argument if a variable is bound twice.
  explicit SolutionMapping(std::vector<Binding> bindings);

  const std::vector<Binding>& bindings() const { return bindings_; }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  const Term* find(const Variable& v) const;
  VarSet domain() const;
  TermSet range() const;

  // ω|_X
  SolutionMapping restrictTo(const VarSet& vars) const;
  // ω‖_B: the bindings whose value lies in B.
  SolutionMapping restrictToRange(const TermSet& terms) const;
  bool rangeWithin(const TermSet& terms) const;

  // "{x↦Alice, y↦_:Alice|r}" style, ASCII: "{x->Alice,y->_:Alice|r}"
  std::string toString() const;

  std::strong_ordering operator<=>(const SolutionMapping& other) const;
  bool operator==(const SolutionMapping&) const = default;

 private:
  struct Sorted {};
  SolutionMapping(Sorted, std::vector<Binding> bindings) : bindings_(std::move(bindings)) {}
  friend std::optional<SolutionMapping> merge(const SolutionMapping&, const SolutionMapping&);

  std::vector<Binding> bindings_;
};

bool compatible(const SolutionMapping& a, const SolutionMapping& b);
// ω1 ∪ ω2 when compatible.
std::optional<SolutionMapping> merge(const SolutionMapping& a, const SolutionMapping& b);
// a ⪯ b
bool extends(const SolutionMapping& a, const SolutionMapping& b);

// A set of solution mappings in canonical (sorted, duplicate-free) order.
class MappingSet {
 public:
  MappingSet() = default;
  MappingSet(std::initializer_list<SolutionMapping> mappings);
  static MappingSet fromUnsorted(std::vector<SolutionMapping> mappings);
  // {{}}
  static MappingSet unit();

  const std::vector<SolutionMapping>& mappings() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  bool contains(const SolutionMapping& m) const;

  std::string toString() const;

  bool operator==(const MappingSet&) const = default;

 private:
  std::vector<SolutionMapping> items_;
};

MappingSet setUnion(const MappingSet& a, const MappingSet& b);
MappingSet setIntersection(const MappingSet& a, const MappingSet& b);
MappingSet setDifference(const MappingSet& a, const MappingSet& b);
bool isSubsetOf(const MappingSet& a, const MappingSet& b);

// Ω1 ⋈ Ω2 and Ω1 \ Ω2. These dispatch to the parallel kernels.
MappingSet join(const MappingSet& a, const MappingSet& b);
MappingSet diff(const MappingSet& a, const MappingSet& b);
// (Ω1 ⋈ Ω2) ∪ (Ω1 \ Ω2)
MappingSet leftOuterJoin(const MappingSet& a, const MappingSet& b);
MappingSet project(const MappingSet& set, const VarSet& vars);
// Ω ▷ B
MappingSet restrictFilter(const MappingSet& set, const TermSet& terms);
// Ω ▶ B
MappingSet restrictProject(const MappingSet& set, const TermSet& terms);
// Ω ⊗ 𝒳
MappingSet otimes(const MappingSet& set, const VarSetFamily& family);
// Ω1 ⪯_g Ω2
bool setExtends(const MappingSet& a, const MappingSet& b);

}  // namespace mcan
