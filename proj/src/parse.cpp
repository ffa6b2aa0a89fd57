#include "gcmwb/parse.hpp"

#include <cctype>
#include <limits>

namespace gcmwb {

namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Integer:
      return "integer '" + t.text + "'";
    case TokenKind::Ident:
      return "identifier '" + t.text + "'";
    case TokenKind::Symbol:
      return "'" + t.text + "'";
  }
  return "?";
}

std::string format(std::size_t line, std::size_t col, const std::string& msg, const std::vector<std::string>& exp) {
  std::string s = std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
  if (!exp.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? ", " : "") + exp[i];
    s += ")";
  }
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : Error(format(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Integer, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*^()[]{},;=/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({TokenKind::Symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      std::string shown = c >= 32 && c < 127 ? std::string(1, static_cast<char>(c)) : "\\x" + std::to_string(c);
      throw ParseError(line, col, "unexpected character '" + shown + "'");
    }
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

void TokenStream::fail(std::string message, std::vector<std::string> expected) const {
  throw ParseError(peek().line, peek().column, std::move(message), std::move(expected));
}

void TokenStream::expect_symbol(char c) {
  if (!at_symbol(c)) fail("unexpected " + describe(peek()), {std::string("'") + c + "'"});
  next();
}

std::string TokenStream::expect_ident(std::string_view what) {
  if (peek().kind != TokenKind::Ident) fail("unexpected " + describe(peek()), {std::string(what)});
  return next().text;
}

long TokenStream::expect_integer(std::string_view what) {
  if (peek().kind != TokenKind::Integer) fail("unexpected " + describe(peek()), {std::string(what)});
  const Token& t = peek();
  if (t.text.size() > 12) fail("integer too large");
  long v = std::stol(t.text);
  next();
  return v;
}

namespace {

Polynomial parse_expr(const RingPtr& ring, TokenStream& ts, int depth);

Polynomial parse_atom(const RingPtr& ring, TokenStream& ts, int depth) {
  const Token& t = ts.peek();
  if (t.kind == TokenKind::Integer) {
    if (t.text.size() > 30) ts.fail("integer literal too long");
    mpq_class v{mpz_class(t.text)};
    ts.next();
    if (ts.at_symbol('/')) {
      ts.next();
      const Token& den = ts.peek();
      if (den.kind != TokenKind::Integer || den.text.size() > 30) ts.fail("expected a denominator", {"integer"});
      mpz_class z(den.text);
      if (z == 0 || (!ring->field().is_rational() && z % ring->field().characteristic() == 0))
        ts.fail("division by zero in the coefficient field");
      ts.next();
      v /= z;
      v.canonicalize();
    }
    return Polynomial::constant(ring, Coefficient(ring->field(), v));
  }
  if (t.kind == TokenKind::Ident) {
    auto idx = ring->index_of(t.text);
    if (!idx) ts.fail("unknown variable '" + t.text + "'");
    ts.next();
    return Polynomial::variable(ring, *idx);
  }
  if (ts.at_symbol('(')) {
    ts.next();
    Polynomial p = parse_expr(ring, ts, depth + 1);
    ts.expect_symbol(')');
    return p;
  }
  ts.fail("unexpected " + describe(t), {"integer", "variable", "'('"});
}

Polynomial parse_factor(const RingPtr& ring, TokenStream& ts, int depth) {
  if (depth > 200) ts.fail("expression nested too deeply");
  if (ts.at_symbol('-')) {
    ts.next();
    return -parse_factor(ring, ts, depth + 1);
  }
  Polynomial base = parse_atom(ring, ts, depth);
  if (ts.at_symbol('^')) {
    ts.next();
    const long e = ts.expect_integer("exponent");
    if (e > 1000) ts.fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }
  return base;
}

Polynomial parse_term(const RingPtr& ring, TokenStream& ts, int depth) {
  Polynomial p = parse_factor(ring, ts, depth);
  while (ts.at_symbol('*')) {
    ts.next();
    p = p * parse_factor(ring, ts, depth);
  }
  return p;
}

Polynomial parse_expr(const RingPtr& ring, TokenStream& ts, int depth) {
  Polynomial p = parse_term(ring, ts, depth);
  while (ts.at_symbol('+') || ts.at_symbol('-')) {
    const bool plus = ts.at_symbol('+');
    ts.next();
    Polynomial q = parse_term(ring, ts, depth);
    p = plus ? p + q : p - q;
  }
  return p;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, TokenStream& ts) { return parse_expr(ring, ts, 0); }

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  TokenStream ts(tokenize(text));
  Polynomial p = parse_polynomial(ring, ts);
  if (!ts.at_end()) ts.fail("trailing input", {"operator", "end of input"});
  return p;
}

}  // namespace gcmwb
