#include "dini/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace dini::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 8> kFuncs{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"exp", Func::exp},
    {"log", Func::log},
    {"sqrt", Func::sqrt},
    {"abs", Func::abs},
    {"atan", Func::atan},
}};

std::string describe_offset(std::size_t offset, std::string expected, std::string found) {
  return "parse error at offset " + std::to_string(offset) + ": expected " + expected +
         ", found " + found;
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t n, std::size_t m) : src_(src), n_(n), m_(m) {}

  Expr run() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expression");
    Expr e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("operator or end of input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t n_, m_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string found() const {
    if (pos_ >= src_.size()) return "end of input";
    return std::string("'") + src_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(pos_, expected, found());
  }

  static Expr binary(Kind k, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = binary(c == '+' ? Kind::add : Kind::sub, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      lhs = binary(c == '*' ? Kind::mul : Kind::div, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (peek() == '-') {
      ++pos_;
      Expr e;
      e.kind = Kind::neg;
      e.args.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek() == '^') {
      ++pos_;
      return binary(Kind::pow, std::move(base), unary());
    }
    return base;
  }

  Expr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (peek() != ')') fail("')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("expression");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
      if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
        pos_ = q;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    Expr e;
    e.kind = Kind::number;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, e.value);
    if (ec != std::errc() || ptr != last || !std::isfinite(e.value)) {
      pos_ = start;
      fail("number");
    }
    return e;
  }

  std::string valid_names() const {
    std::string names;
    for (std::size_t i = 1; i <= n_; ++i) names += "x" + std::to_string(i) + " ";
    for (std::size_t i = 1; i <= m_; ++i) names += "y" + std::to_string(i) + " ";
    for (const auto& [name, f] : kFuncs) names += std::string(name) + "() ";
    if (!names.empty()) names.pop_back();
    return names;
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);

    for (const auto& [name, f] : kFuncs) {
      if (word != name) continue;
      if (peek() != '(') fail("'(' after " + std::string(name));
      ++pos_;
      Expr e;
      e.kind = Kind::call;
      e.func = f;
      e.args.push_back(expr());
      if (peek() != ')') fail("')'");
      ++pos_;
      return e;
    }

    if (word.size() >= 2 && (word[0] == 'x' || word[0] == 'y')) {
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), k);
      const bool is_x = word[0] == 'x';
      const std::size_t limit = is_x ? n_ : m_;
      if (ec == std::errc() && ptr == word.data() + word.size() && word[1] != '0' && k >= 1 &&
          k <= limit) {
        Expr e;
        e.kind = is_x ? Kind::var_x : Kind::var_y;
        e.index = k - 1;
        return e;
      }
    }
    throw ParseError(start, "one of: " + valid_names(), "unknown identifier '" + std::string(word) + "'");
  }
};

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw EvaluationError(std::string("non-finite result in ") + what);
  return v;
}

// Binding strength used by the printer; matches the parser's levels.
int level(const Expr& e) {
  switch (e.kind) {
    case Kind::add:
    case Kind::sub:
      return 1;
    case Kind::mul:
    case Kind::div:
      return 2;
    case Kind::neg:
      return 3;
    case Kind::pow:
      return 4;
    default:
      return 5;
  }
}

void print_into(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(e, out);
  if (wrap) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Kind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.value);
      out += buf;
      return;
    }
    case Kind::var_x:
      out += "x" + std::to_string(e.index + 1);
      return;
    case Kind::var_y:
      out += "y" + std::to_string(e.index + 1);
      return;
    case Kind::neg:
      out += '-';
      print_wrapped(e.args[0], level(e.args[0]) < 3, out);
      return;
    case Kind::call:
      out += func_name(e.func);
      out += '(';
      print_into(e.args[0], out);
      out += ')';
      return;
    case Kind::pow:
      print_wrapped(e.args[0], level(e.args[0]) < 5, out);
      out += '^';
      print_wrapped(e.args[1], level(e.args[1]) < 3, out);
      return;
    default: {
      const int self = level(e);
      const char op = e.kind == Kind::add ? '+' : e.kind == Kind::sub ? '-' : e.kind == Kind::mul ? '*' : '/';
      print_wrapped(e.args[0], level(e.args[0]) < self, out);
      out += ' ';
      out += op;
      out += ' ';
      print_wrapped(e.args[1], level(e.args[1]) <= self, out);
      return;
    }
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : Error(describe_offset(offset, expected, found)),
      offset(offset),
      expected(std::move(expected)),
      found(std::move(found)) {}

Expr parse(std::string_view src, std::size_t n, std::size_t m) {
  return Parser(src, n, m).run();
}

std::string_view func_name(Func f) {
  for (const auto& [name, g] : kFuncs)
    if (g == f) return name;
  return "?";
}

double eval_expr(const Expr& e, const Vector& x, const Vector& y) {
  switch (e.kind) {
    case Kind::number:
      return e.value;
    case Kind::var_x:
      if (e.index >= x.size()) throw DimensionError("x index out of range");
      return x[e.index];
    case Kind::var_y:
      if (e.index >= y.size()) throw DimensionError("y index out of range");
      return y[e.index];
    case Kind::neg:
      return -eval_expr(e.args[0], x, y);
    case Kind::add:
      return checked(eval_expr(e.args[0], x, y) + eval_expr(e.args[1], x, y), "+");
    case Kind::sub:
      return checked(eval_expr(e.args[0], x, y) - eval_expr(e.args[1], x, y), "-");
    case Kind::mul:
      return checked(eval_expr(e.args[0], x, y) * eval_expr(e.args[1], x, y), "*");
    case Kind::div: {
      const double num = eval_expr(e.args[0], x, y);
      const double den = eval_expr(e.args[1], x, y);
      if (den == 0.0) throw EvaluationError("division by zero");
      return checked(num / den, "/");
    }
    case Kind::pow: {
      const double base = eval_expr(e.args[0], x, y);
      const double expo = eval_expr(e.args[1], x, y);
      if (base < 0.0 && std::trunc(expo) != expo) {
        throw EvaluationError("negative base with non-integer exponent");
      }
      if (base == 0.0 && expo < 0.0) throw EvaluationError("division by zero in ^");
      return checked(std::pow(base, expo), "^");
    }
    case Kind::call: {
      const double a = eval_expr(e.args[0], x, y);
      switch (e.func) {
        case Func::sin:
          return std::sin(a);
        case Func::cos:
          return std::cos(a);
        case Func::tan:
          return checked(std::tan(a), "tan");
        case Func::exp:
          return checked(std::exp(a), "exp");
        case Func::log:
          if (a <= 0.0) throw EvaluationError("log of non-positive value");
          return std::log(a);
        case Func::sqrt:
          if (a < 0.0) throw EvaluationError("sqrt of negative value");
          return std::sqrt(a);
        case Func::abs:
          return std::abs(a);
        case Func::atan:
          return std::atan(a);
      }
    }
  }
  throw EvaluationError("malformed expression tree");
}

std::string print(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

}  // namespace dini::expr
