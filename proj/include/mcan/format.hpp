#pragma once

#include <string>
#include <string_view>

#include "mcan/chase.hpp"
#include "mcan/mapping.hpp"

namespace mcan {

// One mapping per line, "?x=Alice<TAB>?y=Bob". The empty mapping is an
// empty line; the empty set prints nothing.
std::string toTsv(const MappingSet& set);
// [{"x":"Alice","y":"Bob"}, ...]
std::string toJson(const MappingSet& set);
MappingSet mappingSetFromJson(std::string_view text);

// Chase dump: a comment header with the bound, then one fact per line.
std::string formatChase(const ChaseGraph& can);

std::string readFile(const std::string& path);

}  // namespace mcan
