#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcan/term.hpp"

namespace mcan {

// A role name or its inverse.
struct RoleExpr {
  std::string name;
  bool inverse = false;

  RoleExpr inverted() const { return RoleExpr{name, !inverse}; }
  // "r" or "inv(r)"
  std::string toString() const;

  auto operator<=>(const RoleExpr&) const = default;
  bool operator==(const RoleExpr&) const = default;
};

enum class BasicConceptKind : std::uint8_t { Atomic, ExistsRole, ExistsInverseRole };

// A concept name A, or an unqualified existential over a role (exists r) or
// over an inverse role (exists inv(r)).
class BasicConcept {
 public:
  static BasicConcept atomic(std::string conceptName);
  static BasicConcept exists(const RoleExpr& role);

  BasicConceptKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool isAtomic() const { return kind_ == BasicConceptKind::Atomic; }
  // Only meaningful for existentials.
  RoleExpr role() const { return RoleExpr{name_, kind_ == BasicConceptKind::ExistsInverseRole}; }

  // "A", "exists r", "exists inv(r)"
  std::string toString() const;

  auto operator<=>(const BasicConcept&) const = default;
  bool operator==(const BasicConcept&) const = default;

 private:
  BasicConcept(BasicConceptKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  BasicConceptKind kind_ = BasicConceptKind::Atomic;
  std::string name_;
};

struct ConceptInclusion {
  BasicConcept lhs;
  BasicConcept rhs;
  auto operator<=>(const ConceptInclusion&) const = default;
  bool operator==(const ConceptInclusion&) const = default;
};

struct ConceptDisjointness {
  BasicConcept lhs;
  BasicConcept rhs;
  auto operator<=>(const ConceptDisjointness&) const = default;
  bool operator==(const ConceptDisjointness&) const = default;
};

struct RoleInclusion {
  RoleExpr lhs;
  RoleExpr rhs;
  auto operator<=>(const RoleInclusion&) const = default;
  bool operator==(const RoleInclusion&) const = default;
};

using TBoxAxiom = std::variant<ConceptInclusion, ConceptDisjointness, RoleInclusion>;

// "Driver [= exists hasLicense ."
std::string toString(const TBoxAxiom& axiom);

// A concept atom A(t) or a role atom r(t1,t2).
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  static Atom conceptAtom(std::string name, Term arg);
  static Atom roleAtom(std::string name, Term subject, Term object);

  std::size_t arity() const { return args.size(); }
  // "Driver(Alice)" / "hasLicense(Alice,_:Alice|hasLicense)"
  std::string toString() const;

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

// Concept names start with an upper-case letter, role names with a
// lower-case letter. The KB syntax relies on this to tell `A [= B` from
// `r [= s` and to report arity mismatches.
bool isConceptName(std::string_view name);
bool isRoleName(std::string_view name);
bool isReservedName(std::string_view name);

// An immutable-by-convention DL-Lite_R knowledge base.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  // Validates the ABox (individual terms only, arity matching the name kind).
  KnowledgeBase(std::set<TBoxAxiom> tbox, std::set<Atom> abox);

  const std::set<TBoxAxiom>& tbox() const { return tbox_; }
  const std::set<Atom>& abox() const { return abox_; }

  // The same ABox with no axioms.
  KnowledgeBase withoutTBox() const { return KnowledgeBase({}, abox_); }

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::set<TBoxAxiom> tbox_;
  std::set<Atom> abox_;
};

TermSet activeDomain(const KnowledgeBase& kb);

// Concept and role names mentioned anywhere in the KB.
std::set<std::string> conceptNames(const KnowledgeBase& kb);
std::set<std::string> roleNames(const KnowledgeBase& kb);
std::set<std::string> tboxRoleNames(const std::set<TBoxAxiom>& tbox);

KnowledgeBase parseKb(std::string_view text);
std::string serializeKb(const KnowledgeBase& kb);

}  // namespace mcan
