#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dini/function_model.hpp"

namespace dini {

/// A named problem: either an implicit system F(x, y) with seed (a, b) or a
/// pure map F: R^n -> R^n with base point x0.
struct Builtin {
  std::string name;
  std::string description;
  std::optional<DifferentiableMap> implicit;
  Vector a, b;
  std::optional<VectorMap> pure;
  Vector x0;

  bool is_pure() const noexcept { return pure.has_value(); }
};

const std::vector<std::string>& builtin_names();

/// Throws PreconditionError listing the valid names for unknown `name`.
Builtin builtin(std::string_view name);

// Individual maps, for tests and benchmarks.
DifferentiableMap circle_map();         // x^2 + y^2 - 1 on [-2, 2]^2
DifferentiableMap linear_map();         // A y + B x, A = [[2,0],[1,3]], B = (1,1)
DifferentiableMap circle_pair_map();    // (x^2 + y1^2 - 1, y1 - y2)
DifferentiableMap coupled3_map();       // three coupled nonlinear equations, n = 1
DifferentiableMap identity_y_map();     // F(x, y) = y with n = 1, m = 2
VectorMap identity_vector_map();        // F(x) = x on [-10, 10]^2
VectorMap doubling_map();               // F(x) = 2x on [-10, 10]^2
VectorMap shear_map();                  // F(x1, x2) = (x1 + x2^3, x2) on [-3, 3]^2

}  // namespace dini
