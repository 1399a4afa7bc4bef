#pragma once

#include "mcan/mapping.hpp"

namespace mcan::kernels {

// Hash-partitioned join and difference. Ω2 is grouped by domain and indexed
// on the variables each group shares with each domain of Ω1; the probe loop
// over Ω1 runs under OpenMP.
MappingSet parallelJoin(const MappingSet& a, const MappingSet& b);
MappingSet parallelDiff(const MappingSet& a, const MappingSet& b);

// Nested-loop versions that follow the set definitions literally. Kept as
// the test reference for the kernels above.
namespace reference {
MappingSet join(const MappingSet& a, const MappingSet& b);
MappingSet diff(const MappingSet& a, const MappingSet& b);
}  // namespace reference

}  // namespace mcan::kernels
