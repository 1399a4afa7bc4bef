#include "mcan/kb.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace mcan {

namespace {

bool isIdentifierTail(std::string_view name) {
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string RoleExpr::toString() const { return inverse ? "inv(" + name + ")" : name; }

BasicConcept BasicConcept::atomic(std::string conceptName) {
  if (!isConceptName(conceptName)) {
    throw std::invalid_argument("invalid concept name '" + conceptName + "'");
  }
  return BasicConcept(BasicConceptKind::Atomic, std::move(conceptName));
}

BasicConcept BasicConcept::exists(const RoleExpr& role) {
  if (!isRoleName(role.name)) throw std::invalid_argument("invalid role name '" + role.name + "'");
  return BasicConcept(role.inverse ? BasicConceptKind::ExistsInverseRole : BasicConceptKind::ExistsRole,
                      role.name);
}

std::string BasicConcept::toString() const {
  if (isAtomic()) return name_;
  return "exists " + role().toString();
}

std::string toString(const TBoxAxiom& axiom) {
  return std::visit(Overloaded{
                        [](const ConceptInclusion& ax) {
                          return ax.lhs.toString() + " [= " + ax.rhs.toString() + " .";
                        },
                        [](const ConceptDisjointness& ax) {
                          return ax.lhs.toString() + " [= not " + ax.rhs.toString() + " .";
                        },
                        [](const RoleInclusion& ax) {
                          return ax.lhs.toString() + " [= " + ax.rhs.toString() + " .";
                        },
                    },
                    axiom);
}

Atom Atom::conceptAtom(std::string name, Term arg) { return Atom{std::move(name), {std::move(arg)}}; }

Atom Atom::roleAtom(std::string name, Term subject, Term object) {
  return Atom{std::move(name), {std::move(subject), std::move(object)}};
}

std::string Atom::toString() const {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].toString();
  }
  return out + ")";
}

bool isConceptName(std::string_view name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name.front())) && isIdentifierTail(name);
}

bool isRoleName(std::string_view name) {
  return !name.empty() && std::islower(static_cast<unsigned char>(name.front())) && isIdentifierTail(name);
}

bool isReservedName(std::string_view name) {
  static constexpr std::array<std::string_view, 14> kReserved = {
      "exists",  "inv",       "not",          "TBOX",          "ABOX",
      "Thing",   "Nothing",   "topObjectProperty", "bottomObjectProperty",
      "type",    "subClassOf", "subPropertyOf", "disjointWith", "inverseOf"};
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

KnowledgeBase::KnowledgeBase(std::set<TBoxAxiom> tbox, std::set<Atom> abox)
    : tbox_(std::move(tbox)), abox_(std::move(abox)) {
  for (const Atom& atom : abox_) {
    if (atom.arity() == 1 && !isConceptName(atom.predicate)) {
      throw std::invalid_argument("unary ABox atom over non-concept name: " + atom.toString());
    }
    if (atom.arity() == 2 && !isRoleName(atom.predicate)) {
      throw std::invalid_argument("binary ABox atom over non-role name: " + atom.toString());
    }
    if (atom.arity() != 1 && atom.arity() != 2) {
      throw std::invalid_argument("ABox atoms take one or two arguments: " + atom.toString());
    }
    for (const Term& t : atom.args) {
      if (!t.isIndividual()) throw std::invalid_argument("ABox atom mentions a non-individual: " + atom.toString());
    }
  }
  for (const TBoxAxiom& axiom : tbox_) {
    if (const auto* d = std::get_if<ConceptDisjointness>(&axiom); d && d->lhs == d->rhs) {
      throw std::invalid_argument("a concept cannot be disjoint with itself: " + toString(axiom));
    }
  }
}

TermSet activeDomain(const KnowledgeBase& kb) {
  // DL-Lite_R axioms mention no individuals, so the ABox is the only source.
  TermSet out;
  for (const Atom& atom : kb.abox()) out.insert(atom.args.begin(), atom.args.end());
  return out;
}

namespace {

void collectNames(const BasicConcept& b, std::set<std::string>& concepts, std::set<std::string>& roles) {
  (b.isAtomic() ? concepts : roles).insert(b.name());
}

}  // namespace

std::set<std::string> tboxRoleNames(const std::set<TBoxAxiom>& tbox) {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  for (const TBoxAxiom& axiom : tbox) {
    std::visit(Overloaded{
                   [&](const ConceptInclusion& ax) {
                     collectNames(ax.lhs, concepts, roles);
                     collectNames(ax.rhs, concepts, roles);
                   },
                   [&](const ConceptDisjointness& ax) {
                     collectNames(ax.lhs, concepts, roles);
                     collectNames(ax.rhs, concepts, roles);
                   },
                   [&](const RoleInclusion& ax) {
                     roles.insert(ax.lhs.name);
                     roles.insert(ax.rhs.name);
                   },
               },
               axiom);
  }
  return roles;
}

std::set<std::string> roleNames(const KnowledgeBase& kb) {
  std::set<std::string> out = tboxRoleNames(kb.tbox());
  for (const Atom& atom : kb.abox()) {
    if (atom.arity() == 2) out.insert(atom.predicate);
  }
  return out;
}

std::set<std::string> conceptNames(const KnowledgeBase& kb) {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  for (const TBoxAxiom& axiom : kb.tbox()) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&axiom)) {
      collectNames(ci->lhs, concepts, roles);
      collectNames(ci->rhs, concepts, roles);
    } else if (const auto* cd = std::get_if<ConceptDisjointness>(&axiom)) {
      collectNames(cd->lhs, concepts, roles);
      collectNames(cd->rhs, concepts, roles);
    }
  }
  for (const Atom& atom : kb.abox()) {
    if (atom.arity() == 1) concepts.insert(atom.predicate);
  }
  return concepts;
}

std::string serializeKb(const KnowledgeBase& kb) {
  std::vector<std::string> axioms;
  for (const TBoxAxiom& axiom : kb.tbox()) axioms.push_back(toString(axiom));
  std::vector<std::string> facts;
  for (const Atom& atom : kb.abox()) facts.push_back(atom.toString() + " .");
  std::sort(axioms.begin(), axioms.end());
  std::sort(facts.begin(), facts.end());

  std::string out = "TBOX:\n";
  for (const auto& line : axioms) out += line + "\n";
  out += "ABOX:\n";
  for (const auto& line : facts) out += line + "\n";
  return out;
}

}  // namespace mcan
