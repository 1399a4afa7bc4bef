#include <optional>
#include <variant>

#include "lexer.hpp"
#include "mcan/errors.hpp"
#include "mcan/kb.hpp"

namespace mcan {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

// One side of an axiom before we know whether the axiom relates concepts or roles.
using Side = std::variant<BasicConcept, RoleExpr>;

class KbParser {
 public:
  explicit KbParser(std::string_view text) : lex_(text) {}

  KnowledgeBase parse() {
    std::set<TBoxAxiom> tbox;
    std::set<Atom> abox;
    if (lex_.atIdentifier("TBOX")) {
      lex_.take();
      lex_.expect(":");
      while (lex_.peek().kind != TokenKind::End && !lex_.atIdentifier("ABOX")) tbox.insert(axiom());
    }
    if (!lex_.atIdentifier("ABOX")) lex_.fail("expected 'ABOX:'");
    lex_.take();
    lex_.expect(":");
    while (lex_.peek().kind != TokenKind::End) abox.insert(fact());
    return KnowledgeBase(std::move(tbox), std::move(abox));
  }

 private:
  [[noreturn]] static void error(const Token& at, const std::string& message) {
    throw ParseError(message, at.line, at.column);
  }

  Token name(std::string_view what) {
    Token t = lex_.expectIdentifier(what);
    if (isReservedName(t.text)) error(t, "reserved name '" + t.text + "'");
    return t;
  }

  RoleExpr roleExpr() {
    bool inverse = false;
    if (lex_.atIdentifier("inv")) {
      lex_.take();
      lex_.expect("(");
      inverse = true;
    }
    Token t = name("a role name");
    if (!isRoleName(t.text)) error(t, "'" + t.text + "' is not a role name (role names start lower-case)");
    if (inverse) lex_.expect(")");
    return RoleExpr{t.text, inverse};
  }

  Side side() {
    if (lex_.atIdentifier("exists")) {
      lex_.take();
      return BasicConcept::exists(roleExpr());
    }
    if (lex_.atIdentifier("inv")) return roleExpr();
    Token t = name("a concept or role name");
    if (isConceptName(t.text)) return BasicConcept::atomic(t.text);
    if (isRoleName(t.text)) return RoleExpr{t.text, false};
    error(t, "'" + t.text + "' is neither a concept nor a role name");
  }

  TBoxAxiom axiom() {
    Token start = lex_.peek();
    Side lhs = side();
    lex_.expect("[=");
    bool negated = false;
    if (lex_.atIdentifier("not")) {
      lex_.take();
      negated = true;
    }
    Side rhs = side();
    lex_.expect(".");

    const auto* lc = std::get_if<BasicConcept>(&lhs);
    const auto* rc = std::get_if<BasicConcept>(&rhs);
    if (lc && rc) {
      if (!negated) return ConceptInclusion{*lc, *rc};
      if (*lc == *rc) error(start, "a concept cannot be disjoint with itself");
      return ConceptDisjointness{*lc, *rc};
    }
    if (!lc && !rc) {
      if (negated) error(start, "negative role inclusions are not supported");
      return RoleInclusion{std::get<RoleExpr>(lhs), std::get<RoleExpr>(rhs)};
    }
    error(start, "an axiom cannot relate a concept to a role");
  }

  Term individual() {
    Token t = name("an individual");
    if (!isValidIndividualName(t.text)) error(t, "invalid individual name '" + t.text + "'");
    return Term::individual(t.text);
  }

  Atom fact() {
    Token pred = name("a concept or role name");
    lex_.expect("(");
    Term first = individual();
    std::optional<Term> second;
    if (lex_.accept(",")) second = individual();
    lex_.expect(")");
    lex_.expect(".");
    if (!second) {
      if (isRoleName(pred.text)) error(pred, "arity mismatch: role '" + pred.text + "' takes two arguments");
      if (!isConceptName(pred.text)) error(pred, "'" + pred.text + "' is not a concept name");
      return Atom::conceptAtom(pred.text, first);
    }
    if (isConceptName(pred.text)) error(pred, "arity mismatch: concept '" + pred.text + "' takes one argument");
    if (!isRoleName(pred.text)) error(pred, "'" + pred.text + "' is not a role name");
    return Atom::roleAtom(pred.text, first, *second);
  }

  Lexer lex_;
};

}  // namespace

KnowledgeBase parseKb(std::string_view text) { return KbParser(text).parse(); }

}  // namespace mcan
