#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcan/format.hpp"
#include "mcan/kb.hpp"
#include "mcan/mapping.hpp"
#include "mcan/query.hpp"

namespace mcan::testing {

// {{"x","Alice"},{"y","_:w"}}: a leading "_:" makes the term anonymous.
inline SolutionMapping mapping(std::vector<std::pair<std::string, std::string>> bindings) {
  std::vector<Binding> out;
  for (auto& [var, term] : bindings) out.emplace_back(var, Term::fromString(term));
  return SolutionMapping(std::move(out));
}

inline MappingSet mappings(std::vector<std::vector<std::pair<std::string, std::string>>> sets) {
  std::vector<SolutionMapping> out;
  for (auto& m : sets) out.push_back(mapping(std::move(m)));
  return MappingSet::fromUnsorted(std::move(out));
}

inline std::string fixture(const std::string& name) { return std::string(MCAN_FIXTURES_DIR) + "/" + name; }

inline KnowledgeBase fixtureKb(const std::string& name) { return parseKb(readFile(fixture(name + ".kb"))); }
inline Query fixtureQuery(const std::string& name) { return parseQuery(readFile(fixture(name + ".sq"))); }

inline TermSet individuals(std::initializer_list<const char*> names) {
  TermSet out;
  for (const char* n : names) out.insert(Term::individual(n));
  return out;
}

}  // namespace mcan::testing
