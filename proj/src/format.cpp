#include "mcan/format.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mcan {

std::string toTsv(const MappingSet& set) {
  std::string out;
  for (const auto& m : set) {
    bool first = true;
    for (const auto& [v, t] : m) {
      if (!first) out += '\t';
      out += "?" + v + "=" + t.toString();
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string toJson(const MappingSet& set) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& m : set) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (const auto& [v, t] : m) object[v] = t.toString();
    array.push_back(std::move(object));
  }
  return array.dump() + "\n";
}

MappingSet mappingSetFromJson(std::string_view text) {
  auto parsed = nlohmann::json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("expected a JSON array of mappings");
  std::vector<SolutionMapping> mappings;
  for (const auto& object : parsed) {
    std::vector<Binding> bindings;
    for (const auto& [v, t] : object.items()) bindings.emplace_back(v, Term::fromString(t.get<std::string>()));
    mappings.emplace_back(std::move(bindings));
  }
  return MappingSet::fromUnsorted(std::move(mappings));
}

std::string formatChase(const ChaseGraph& can) {
  return "# chase depth " + std::to_string(can.bound) + ", " + std::to_string(can.graph.size()) + " atoms\n" +
         can.graph.toString();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace mcan
