#include "mcan/kernels.hpp"

namespace mcan::kernels::reference {

MappingSet join(const MappingSet& a, const MappingSet& b) {
  std::vector<SolutionMapping> out;
  for (const auto& left : a) {
    for (const auto& right : b) {
      if (auto merged = merge(left, right)) out.push_back(std::move(*merged));
    }
  }
  return MappingSet::fromUnsorted(std::move(out));
}

MappingSet diff(const MappingSet& a, const MappingSet& b) {
  std::vector<SolutionMapping> out;
  for (const auto& left : a) {
    bool anyCompatible = false;
    for (const auto& right : b) anyCompatible = anyCompatible || compatible(left, right);
    if (!anyCompatible) out.push_back(left);
  }
  return MappingSet::fromUnsorted(std::move(out));
}

}  // namespace mcan::kernels::reference
