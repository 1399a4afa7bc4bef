#include "mcan/term.hpp"

#include <cctype>
#include <stdexcept>

namespace mcan {

bool isValidIndividualName(std::string_view name) {
  if (name.empty() || !std::isalnum(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Term Term::individual(std::string name) {
  if (!isValidIndividualName(name)) {
    throw std::invalid_argument("invalid individual name '" + name + "'");
  }
  return Term(TermKind::Individual, std::move(name));
}

Term Term::anonymous(std::string name) {
  if (name.size() < 3 || name.compare(0, 2, "_:") != 0) {
    throw std::invalid_argument("anonymous term names start with '_:': '" + name + "'");
  }
  return Term(TermKind::Anonymous, std::move(name));
}

Term Term::fromString(std::string_view text) {
  if (text.substr(0, 2) == "_:") return anonymous(std::string(text));
  return individual(std::string(text));
}

}  // namespace mcan
