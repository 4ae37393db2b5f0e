#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "dini/errors.hpp"
#include "dini/expr.hpp"
#include "support.hpp"

using namespace dini;
using namespace dini::expr;

namespace {

// Evaluates source text directly, without building a tree. `bad` is set
// when any intermediate is non-finite or outside a function's domain.
class TextEval {
 public:
  TextEval(std::string s, const Vector& x, const Vector& y) : s_(std::move(s)), x_(x), y_(y) {}

  double run(bool& bad) {
    const double v = sum();
    bad = bad_;
    return v;
  }

 private:
  std::string s_;
  const Vector& x_;
  const Vector& y_;
  std::size_t i_ = 0;
  bool bad_ = false;

  char peek() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  double note(double v) {
    if (!std::isfinite(v)) bad_ = true;
    return v;
  }

  double sum() {
    double v = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++i_;
      const double r = product();
      v = note(c == '+' ? v + r : v - r);
    }
    return v;
  }

  double product() {
    double v = signed_factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++i_;
      const double r = signed_factor();
      if (c == '/' && r == 0.0) bad_ = true;
      v = note(c == '*' ? v * r : v / r);
    }
    return v;
  }

  double signed_factor() {
    if (peek() == '-') {
      ++i_;
      return -signed_factor();
    }
    const double base = primary();
    if (peek() == '^') {
      ++i_;
      const double e = signed_factor();
      if (base < 0 && std::trunc(e) != e) bad_ = true;
      if (base == 0 && e < 0) bad_ = true;
      return note(std::pow(base, e));
    }
    return base;
  }

  double primary() {
    const char c = peek();
    if (c == '(') {
      ++i_;
      const double v = sum();
      peek();
      ++i_;  // ')'
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double v = std::strtod(s_.c_str() + i_, &end);
      i_ = static_cast<std::size_t>(end - s_.c_str());
      return v;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string word = s_.substr(start, i_ - start);
    if (word[0] == 'x' || word[0] == 'y') {
      const std::size_t k = std::stoul(word.substr(1)) - 1;
      return word[0] == 'x' ? x_[k] : y_[k];
    }
    peek();
    ++i_;  // '('
    const double a = sum();
    peek();
    ++i_;  // ')'
    if (word == "sin") return std::sin(a);
    if (word == "cos") return std::cos(a);
    if (word == "tan") return note(std::tan(a));
    if (word == "exp") return note(std::exp(a));
    if (word == "log") {
      if (a <= 0) bad_ = true;
      return note(std::log(a));
    }
    if (word == "sqrt") {
      if (a < 0) bad_ = true;
      return note(std::sqrt(a));
    }
    if (word == "abs") return std::fabs(a);
    return std::atan(a);
  }
};

Expr leaf(std::mt19937_64& g) {
  static const double numbers[] = {0.5, 2, 3, 0.1, 1e-7, 7.25, 1e20, 0};
  Expr e;
  switch (g() % 3) {
    case 0:
      e.kind = Kind::number;
      e.value = numbers[g() % 8];
      break;
    case 1:
      e.kind = Kind::var_x;
      e.index = g() % 2;
      break;
    default:
      e.kind = Kind::var_y;
      e.index = g() % 2;
  }
  return e;
}

Expr random_tree(std::mt19937_64& g, int depth) {
  if (depth == 0 || g() % 4 == 0) return leaf(g);
  Expr e;
  const int pick = static_cast<int>(g() % 7);
  if (pick == 0) {
    e.kind = Kind::neg;
    e.args.push_back(random_tree(g, depth - 1));
  } else if (pick == 1) {
    e.kind = Kind::call;
    e.func = static_cast<Func>(g() % 8);
    e.args.push_back(random_tree(g, depth - 1));
  } else {
    static const Kind ops[] = {Kind::add, Kind::sub, Kind::mul, Kind::div, Kind::pow};
    e.kind = ops[pick - 2];
    e.args.push_back(random_tree(g, depth - 1));
    e.args.push_back(random_tree(g, depth - 1));
  }
  return e;
}

}  // namespace

TEST_CASE("parse and evaluate examples") {
  const Expr circle = parse("x1^2 + y1^2 - 1", 1, 1);
  CHECK(std::fabs(eval_expr(circle, Vector{0.6}, Vector{0.8})) < 1e-15);

  const Expr second = parse("8*y1 + y1^3*sin(1/(x1^2+y1^2))", 1, 1);
  const long double want = oracle::example_ld(0.1L, 0.2L)[1];
  CHECK(std::fabs(eval_expr(second, Vector{0.1}, Vector{0.2}) - static_cast<double>(want)) < 1e-15);
  CHECK(eval_expr(second, Vector{0.1}, Vector{0.2}) == doctest::Approx(1.6073036).epsilon(1e-7));

  CHECK(eval_expr(parse("2*x1+3*y1", 1, 1), Vector{1}, Vector{1}) == 5.0);
  CHECK(eval_expr(parse("sin(0)", 0, 0), Vector{}, Vector{}) == 0.0);
  CHECK(eval_expr(parse("-2^2", 0, 0), Vector{}, Vector{}) == -4.0);
  CHECK(eval_expr(parse("2^-1", 0, 0), Vector{}, Vector{}) == 0.5);
  CHECK(eval_expr(parse("1.5e2 + .5", 0, 0), Vector{}, Vector{}) == 150.5);
}

TEST_CASE("parse errors carry the offset") {
  try {
    parse("x1 + * 2", 1, 0);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
  try {
    parse("x3 + 1", 2, 1);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 0);
    CHECK(std::string(e.what()).find("x1 x2 y1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("", 1, 1), ParseError);
  CHECK_THROWS_AS(parse("(x1", 1, 1), ParseError);
  CHECK_THROWS_AS(parse("x1 y1", 1, 1), ParseError);
  CHECK_THROWS_AS(parse("sin x1", 1, 1), ParseError);
  CHECK_THROWS_AS(parse("x0", 1, 1), ParseError);
  CHECK_THROWS_AS(parse("y1", 1, 0), ParseError);
}

TEST_CASE("evaluation errors") {
  const Vector none;
  CHECK_THROWS_AS(eval_expr(parse("1/0", 0, 0), none, none), EvaluationError);
  CHECK_THROWS_AS(eval_expr(parse("log(0)", 0, 0), none, none), EvaluationError);
  CHECK_THROWS_AS(eval_expr(parse("sqrt(-1)", 0, 0), none, none), EvaluationError);
  CHECK_THROWS_AS(eval_expr(parse("(-2)^0.5", 0, 0), none, none), EvaluationError);
  CHECK_THROWS_AS(eval_expr(parse("0^-1", 0, 0), none, none), EvaluationError);
  CHECK_THROWS_AS(eval_expr(parse("exp(1000)", 0, 0), none, none), EvaluationError);
  CHECK(eval_expr(parse("(-2)^3", 0, 0), none, none) == -8.0);
}

TEST_CASE("property: precedence and associativity as trees") {
  const char* atoms[] = {"x1", "x2", "y1", "2.5", "sin(y2)"};
  for (const char* a : atoms) {
    for (const char* b : atoms) {
      for (const char* c : atoms) {
        const std::string sa = a, sb = b, sc = c;
        CHECK(parse(sa + "+" + sb + "*" + sc, 2, 2) == parse(sa + "+(" + sb + "*" + sc + ")", 2, 2));
        CHECK(parse(sa + "^" + sb + "^" + sc, 2, 2) == parse(sa + "^(" + sb + "^" + sc + ")", 2, 2));
        CHECK(parse(sa + "-" + sb + "-" + sc, 2, 2) == parse("(" + sa + "-" + sb + ")-" + sc, 2, 2));
        CHECK(parse("-" + sa + "^" + sb, 2, 2) == parse("-(" + sa + "^" + sb + ")", 2, 2));
      }
    }
  }
}

TEST_CASE("property: print then parse is the identity on trees") {
  auto g = gen::rng(31);
  for (int t = 0; t < 1000; ++t) {
    const Expr e = random_tree(g, 6);
    const std::string text = print(e);
    INFO(text);
    const Expr back = parse(text, 2, 2);
    CHECK(back == e);
    CHECK(print(back) == text);
  }
}

TEST_CASE("property: tree evaluation matches direct text evaluation") {
  auto g = gen::rng(32);
  int compared = 0;
  for (int t = 0; t < 1000; ++t) {
    const Expr e = random_tree(g, 6);
    const std::string text = print(e);
    const Vector x = gen::vec(g, 2, -2, 2), y = gen::vec(g, 2, -2, 2);
    bool bad = false;
    const double want = TextEval(text, x, y).run(bad);
    INFO(text);
    if (bad) {
      CHECK_THROWS_AS(eval_expr(e, x, y), EvaluationError);
      continue;
    }
    CHECK(eval_expr(e, x, y) == want);
    ++compared;
  }
  CHECK(compared > 300);
}
