#include "dini/builtins.hpp"

#include <cmath>

#include "dini/errors.hpp"
#include "dini/example_map.hpp"

namespace dini {

DifferentiableMap circle_map() {
  DifferentiableMap f;
  f.n = 1;
  f.m = 1;
  f.name = "circle";
  f.domain = BoxDomain::cube(2, -2.0, 2.0);
  f.eval = [](const Vector& x, const Vector& y) { return Vector{x[0] * x[0] + y[0] * y[0] - 1.0}; };
  f.jacobian = [](const Vector& x, const Vector& y) { return Matrix{{2 * x[0], 2 * y[0]}}; };
  return f;
}

DifferentiableMap linear_map() {
  DifferentiableMap f;
  f.n = 1;
  f.m = 2;
  f.name = "linear";
  f.domain = BoxDomain::cube(3, -10.0, 10.0);
  f.eval = [](const Vector& x, const Vector& y) {
    return Vector{2 * y[0] + x[0], y[0] + 3 * y[1] + x[0]};
  };
  f.jacobian = [](const Vector&, const Vector&) { return Matrix{{1, 2, 0}, {1, 1, 3}}; };
  return f;
}

DifferentiableMap circle_pair_map() {
  DifferentiableMap f;
  f.n = 1;
  f.m = 2;
  f.name = "circle-pair";
  f.domain = BoxDomain::cube(3, -2.0, 2.0);
  f.eval = [](const Vector& x, const Vector& y) {
    return Vector{x[0] * x[0] + y[0] * y[0] - 1.0, y[0] - y[1]};
  };
  f.jacobian = [](const Vector& x, const Vector& y) {
    return Matrix{{2 * x[0], 2 * y[0], 0}, {0, 1, -1}};
  };
  return f;
}

DifferentiableMap coupled3_map() {
  DifferentiableMap f;
  f.n = 1;
  f.m = 3;
  f.name = "coupled3";
  f.domain = BoxDomain::cube(4, -1.0, 1.0);
  f.eval = [](const Vector& xv, const Vector& y) {
    const double x = xv[0];
    return Vector{
        2 * y[0] + 0.5 * std::sin(y[1]) + 0.3 * y[2] * y[2] - x,
        0.4 * y[0] * y[0] + 3 * y[1] + 0.2 * y[2] - x * x,
        0.3 * y[0] + 0.2 * std::sin(y[1]) + 2.5 * y[2] + 0.5 * y[2] * y[2] * y[2] - 0.5 * x,
    };
  };
  f.jacobian = [](const Vector& xv, const Vector& y) {
    const double x = xv[0];
    return Matrix{
        {-1.0, 2.0, 0.5 * std::cos(y[1]), 0.6 * y[2]},
        {-2 * x, 0.8 * y[0], 3.0, 0.2},
        {-0.5, 0.3, 0.2 * std::cos(y[1]), 2.5 + 1.5 * y[2] * y[2]},
    };
  };
  return f;
}

DifferentiableMap identity_y_map() {
  DifferentiableMap f;
  f.n = 1;
  f.m = 2;
  f.name = "identity-y";
  f.domain = BoxDomain::cube(3, -10.0, 10.0);
  f.eval = [](const Vector&, const Vector& y) { return y; };
  f.jacobian = [](const Vector&, const Vector&) { return Matrix{{0, 1, 0}, {0, 0, 1}}; };
  return f;
}

VectorMap identity_vector_map() {
  VectorMap f;
  f.dim = 2;
  f.name = "identity";
  f.domain = BoxDomain::cube(2, -10.0, 10.0);
  f.eval = [](const Vector& x) { return x; };
  f.jacobian = [](const Vector&) { return Matrix::identity(2); };
  return f;
}

VectorMap doubling_map() {
  VectorMap f;
  f.dim = 2;
  f.name = "double";
  f.domain = BoxDomain::cube(2, -10.0, 10.0);
  f.eval = [](const Vector& x) { return 2.0 * x; };
  f.jacobian = [](const Vector&) { return 2.0 * Matrix::identity(2); };
  return f;
}

VectorMap shear_map() {
  VectorMap f;
  f.dim = 2;
  f.name = "shear";
  f.domain = BoxDomain::cube(2, -3.0, 3.0);
  f.eval = [](const Vector& x) { return Vector{x[0] + x[1] * x[1] * x[1], x[1]}; };
  f.jacobian = [](const Vector& x) { return Matrix{{1, 3 * x[1] * x[1]}, {0, 1}}; };
  return f;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"circle", "linear", "circle-pair", "coupled3",
                                              "identity-y", "paper-example", "identity",
                                              "double", "shear"};
  return names;
}

Builtin builtin(std::string_view name) {
  Builtin b;
  b.name = std::string(name);
  auto implicit = [&](DifferentiableMap f, Vector a, Vector seed, std::string text) {
    b.implicit = std::move(f);
    b.a = std::move(a);
    b.b = std::move(seed);
    b.description = std::move(text);
    return b;
  };
  auto pure = [&](VectorMap f, std::string text) {
    b.x0 = Vector(f.dim, 0.0);
    b.pure = std::move(f);
    b.description = std::move(text);
    return b;
  };

  if (name == "circle") return implicit(circle_map(), {0.0}, {1.0}, "x1^2 + y1^2 - 1, upper branch");
  if (name == "linear") {
    return implicit(linear_map(), {0.0}, {0.0, 0.0}, "A y + B x with A = [[2,0],[1,3]], B = (1,1)");
  }
  if (name == "circle-pair") {
    return implicit(circle_pair_map(), {0.0}, {1.0, 1.0}, "(x1^2 + y1^2 - 1, y1 - y2)");
  }
  if (name == "coupled3") {
    return implicit(coupled3_map(), {0.0}, {0.0, 0.0, 0.0}, "three coupled nonlinear equations");
  }
  if (name == "identity-y") return implicit(identity_y_map(), {0.0}, {0.0, 0.0}, "F(x, y) = y");
  if (name == "paper-example") {
    return pure(example_map(), "8x + x^3 cos(1/r^2), 8y + y^3 sin(1/r^2); Jacobian discontinuous at 0");
  }
  if (name == "identity") return pure(identity_vector_map(), "F(x) = x");
  if (name == "double") return pure(doubling_map(), "F(x) = 2x");
  if (name == "shear") return pure(shear_map(), "F(x1, x2) = (x1 + x2^3, x2)");

  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw PreconditionError("unknown builtin '" + std::string(name) + "'; valid: " + valid);
}

}  // namespace dini
