#pragma once
// Linear combinations of quiver paths, e.g. "eps*eps + beta*alpha" or
// "2/3*id(X) - alpha*eps".
//
// Products are written in applicative order: "a*b" means first b, then a, so
// the written string matches the composite a∘b.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "arideal/field.hpp"

namespace arideal {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One factor of a written path: an arrow name or id(vertex).
struct PathAtom {
  bool is_identity = false;
  std::string name;  // arrow name, or the vertex name for an identity
  std::size_t column = 0;
};

struct Term {
  mpq_class coefficient;
  std::vector<PathAtom> factors;  // written order; the last factor is applied first
};

/// An unresolved expression; an empty term list is the literal 0.
struct Expression {
  std::vector<Term> terms;
  bool is_zero_literal() const { return terms.empty(); }
};

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
/// Vertex names additionally admit brackets, as in "P4[1]".
inline bool is_vertex_char(char c) { return is_name_char(c) || c == '[' || c == ']'; }

inline bool is_valid_vertex_name(std::string_view s) {
  if (s.empty() || !is_name_start(s.front())) return false;
  for (char c : s)
    if (!is_vertex_char(c)) return false;
  return true;
}
inline bool is_valid_arrow_name(std::string_view s) {
  if (s.empty() || !is_name_start(s.front()) || s == "id") return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  Expression parse() {
    Expression expr;
    skip_ws();
    if (at_end()) fail("empty expression");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return expr;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (sign < 0) t.coefficient = -t.coefficient;
      if (sgn(t.coefficient) != 0) expr.terms.push_back(std::move(t));
      first = false;
    }
    if (first) fail("empty expression");
    return expr;
  }

 private:
  Term parse_term() {
    Term t;
    t.coefficient = 1;
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = parse_scalar();
      skip_ws();
      if (at_end() || peek() != '*') fail("a scalar must be followed by '*' and a path");
      ++pos_;
      skip_ws();
    }
    while (true) {
      t.factors.push_back(parse_atom());
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        continue;
      }
      break;
    }
    return t;
  }

  mpq_class parse_scalar() {
    const std::size_t start = pos_;
    std::string num = digits();
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed scalar");
      den = digits();
    }
    mpz_class d(den);
    if (d == 0) fail_at(start, "malformed scalar: zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  PathAtom parse_atom() {
    if (at_end() || !is_name_start(peek())) fail("expected an arrow name or id(vertex)");
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && is_name_char(peek())) name += text_[pos_++];
    PathAtom atom;
    atom.column = offset_ + start + 1;
    skip_ws();
    if (name == "id") {
      if (at_end() || peek() != '(') fail("expected '(' after id");
      ++pos_;
      skip_ws();
      std::string vertex;
      while (!at_end() && is_vertex_char(peek())) vertex += text_[pos_++];
      skip_ws();
      if (vertex.empty() || at_end() || peek() != ')') fail("expected id(vertex)");
      ++pos_;
      atom.is_identity = true;
      atom.name = vertex;
      return atom;
    }
    atom.name = name;
    return atom;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, offset_ + pos + 1, msg);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse one expression; `line` and `column_offset` locate it for errors.
inline Expression parse_expression(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0) {
  return detail::ExpressionParser(text, line, column_offset).parse();
}

}  // namespace arideal
