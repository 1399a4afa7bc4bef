#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace mcan {

enum class TermKind : std::uint8_t { Individual, Anonymous };

// An element of the universe: either a named individual or an anonymous
// chase witness whose name records the path that created it.
class Term {
 public:
  static Term individual(std::string name);
  static Term anonymous(std::string name);

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool isIndividual() const { return kind_ == TermKind::Individual; }
  bool isAnonymous() const { return kind_ == TermKind::Anonymous; }

  // Individuals print as their name; anonymous terms already carry "_:".
  const std::string& toString() const { return name_; }

  // Parses the printed form back: a leading "_:" means anonymous.
  static Term fromString(std::string_view text);

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  Term(TermKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  TermKind kind_ = TermKind::Individual;
  std::string name_;
};

using TermSet = std::set<Term>;

bool isValidIndividualName(std::string_view name);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    return std::hash<std::string>{}(t.name()) ^ (t.isAnonymous() ? 0x9e3779b97f4a7c15ULL : 0);
  }
};

}  // namespace mcan
