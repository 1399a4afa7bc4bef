#include "lexer.hpp"
#include "mcan/errors.hpp"
#include "mcan/query.hpp"

namespace mcan {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : lex_(text) {}

  Query parse() {
    Query q = query();
    if (lex_.peek().kind != TokenKind::End) lex_.fail("unexpected trailing input");
    return q;
  }

 private:
  Query query() {
    Token head = lex_.expectIdentifier("a query");
    if (head.text == "SELECT") return select(head);
    if (head.text == "UNION" || head.text == "JOIN" || head.text == "OPT") {
      lex_.expect("(");
      Query left = query();
      lex_.expect(",");
      Query right = query();
      lex_.expect(")");
      if (head.text == "UNION") return Query::unionOf(std::move(left), std::move(right));
      if (head.text == "JOIN") return Query::join(std::move(left), std::move(right));
      return Query::opt(std::move(left), std::move(right));
    }
    return pattern(head);
  }

  Query select(const Token& head) {
    lex_.expect("{");
    VarSet projection;
    if (!lex_.atSymbol("}")) {
      do {
        const Token& t = lex_.peek();
        if (t.kind != TokenKind::Identifier && t.kind != TokenKind::Variable) lex_.fail("expected a variable");
        projection.insert(lex_.take().text);
      } while (lex_.accept(","));
    }
    lex_.expect("}");
    lex_.expect("(");
    Query body = query();
    lex_.expect(")");
    try {
      return Query::select(std::move(projection), std::move(body));
    } catch (const ShapeError& e) {
      throw ParseError(e.what(), head.line, head.column);
    }
  }

  PatternTerm term() {
    const Token& t = lex_.peek();
    if (t.kind == TokenKind::Variable) return PatternTerm::variable(lex_.take().text);
    if (t.kind == TokenKind::Identifier) {
      if (!isValidIndividualName(t.text)) lex_.fail("invalid individual name");
      return PatternTerm::constant(Term::individual(lex_.take().text));
    }
    lex_.fail("expected a variable or an individual");
  }

  Query pattern(const Token& head) {
    lex_.expect("(");
    std::vector<PatternTerm> args;
    args.push_back(term());
    if (lex_.accept(",")) args.push_back(term());
    lex_.expect(")");
    try {
      return Query::triple(head.text, std::move(args));
    } catch (const ShapeError& e) {
      throw ParseError(e.what(), head.line, head.column);
    }
  }

  Lexer lex_;
};

}  // namespace

Query parseQuery(std::string_view text) { return QueryParser(text).parse(); }

}  // namespace mcan
