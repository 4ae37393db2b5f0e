#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dini/errors.hpp"
#include "dini/linalg.hpp"

namespace dini::expr {

enum class Kind { number, var_x, var_y, neg, add, sub, mul, div, pow, call };
enum class Func { sin, cos, tan, exp, log, sqrt, abs, atan };

/// Expression tree node. Variables carry a 0-based index; binary nodes have
/// two children, neg and call have one.
struct Expr {
  Kind kind = Kind::number;
  double value = 0.0;
  std::size_t index = 0;
  Func func = Func::sin;
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);

  std::size_t offset;
  std::string expected;
  std::string found;
};

/// Grammar, lowest to highest precedence:
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' unary)?          (right-associative)
///   atom  := NUMBER | x<k> | y<k> | func '(' expr ')' | '(' expr ')'
/// Variable indices are 1-based in the source and must satisfy k <= n (x)
/// or k <= m (y).
Expr parse(std::string_view src, std::size_t n, std::size_t m);

/// Throws EvaluationError on division by zero, log/sqrt outside their domain,
/// negative base with non-integer exponent, or any non-finite result.
double eval_expr(const Expr& e, const Vector& x, const Vector& y);

/// Canonical text with minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

std::string_view func_name(Func f);

}  // namespace dini::expr
