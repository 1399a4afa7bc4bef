#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "mcan/errors.hpp"

namespace mcan::detail {

enum class TokenKind { Identifier, Variable, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Shared tokenizer for the KB and query syntaxes. Identifiers are runs of
// [A-Za-z0-9_]; "?name" is a variable; "[=" and single characters from
// "(),.:{}" are symbols; '#' starts a comment running to end of line.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool atSymbol(std::string_view s) const { return current_.kind == TokenKind::Symbol && current_.text == s; }
  bool atIdentifier(std::string_view s) const {
    return current_.kind == TokenKind::Identifier && current_.text == s;
  }

  bool accept(std::string_view symbol) {
    if (!atSymbol(symbol)) return false;
    advance();
    return true;
  }

  void expect(std::string_view symbol) {
    if (!accept(symbol)) fail("expected '" + std::string(symbol) + "'");
  }

  Token expectIdentifier(std::string_view what) {
    if (current_.kind != TokenKind::Identifier) fail("expected " + std::string(what));
    return take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = current_.kind == TokenKind::End ? "end of input" : "'" + current_.text + "'";
    throw ParseError(message + ", found " + found, current_.line, current_.column);
  }

 private:
  static bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
    current_ = Token{TokenKind::End, "", line_, column_};
    if (pos_ >= text_.size()) return;

    char c = text_[pos_];
    std::size_t start = pos_;
    if (isIdentChar(c)) {
      while (pos_ < text_.size() && isIdentChar(text_[pos_])) bump();
      current_.kind = TokenKind::Identifier;
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (c == '?') {
      bump();
      while (pos_ < text_.size() && isIdentChar(text_[pos_])) bump();
      if (pos_ == start + 1) throw ParseError("expected a variable name after '?'", current_.line, current_.column);
      current_.kind = TokenKind::Variable;
      current_.text = std::string(text_.substr(start + 1, pos_ - start - 1));
    } else if (c == '[' && at(pos_ + 1) == '=') {
      bump();
      bump();
      current_.kind = TokenKind::Symbol;
      current_.text = "[=";
    } else if (std::string_view("(),.:{}").find(c) != std::string_view::npos) {
      bump();
      current_.kind = TokenKind::Symbol;
      current_.text = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", current_.line, current_.column);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

}  // namespace mcan::detail
