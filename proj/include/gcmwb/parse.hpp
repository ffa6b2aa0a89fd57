#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gcmwb/error.hpp"
#include "gcmwb/polynomial.hpp"

namespace gcmwb {

/// Syntax or semantic error at a 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_, column_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class TokenKind { Ident, Integer, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line, column;
};

/// Splits input into identifiers, integers and one-character symbols.
/// `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token list with helpers for positioned errors.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(char c) const { return peek().kind == TokenKind::Symbol && peek().text[0] == c; }
  bool at_word(std::string_view w) const { return peek().kind == TokenKind::Ident && peek().text == w; }
  bool at_end() const { return peek().kind == TokenKind::End; }
  void expect_symbol(char c);
  std::string expect_ident(std::string_view what);
  long expect_integer(std::string_view what);
  [[noreturn]] void fail(std::string message, std::vector<std::string> expected = {}) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// expr := term (('+' | '-') term)*; term := factor ('*' factor)*;
/// factor := '-' factor | atom ('^' integer)?; atom := integer ('/' integer)? | variable | '(' expr ')'.
Polynomial parse_polynomial(const RingPtr& ring, TokenStream& ts);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace gcmwb
