#pragma once

// F(x, y) = (8x + x^3 cos(1/(x^2+y^2)), 8y + y^3 sin(1/(x^2+y^2))), F(0,0) = 0.
//
// Differentiable everywhere with JF(0,0) = diag(8, 8), but every Jacobian
// entry is discontinuous at the origin. On the closed unit disc the first
// leading minor is >= 3 and |det JF| >= 3^2 - 2^2 = 5, so the map is locally
// invertible although it is not C^1.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dini/function_model.hpp"
#include "dini/hypothesis_checker.hpp"

namespace dini {

/// Below this x^2 + y^2 the analytic Jacobian returns diag(8, 8); the
/// (x^2+y^2)^-2 factors would overflow first.
inline constexpr double kExampleOriginCutoff = 1e-150;

inline constexpr double kExampleHalfWidth = 0.7;  // box [-0.7, 0.7]^2 lies in the unit disc

template <std::floating_point T>
std::array<T, 2> example_eval_t(T x, T y) {
  const T s = x * x + y * y;
  if (s == T(0)) return {T(0), T(0)};
  const T inv = T(1) / s;
  if (!std::isfinite(inv)) return {8 * x, 8 * y};
  return {8 * x + x * x * x * std::cos(inv), 8 * y + y * y * y * std::sin(inv)};
}

Vector example_eval(const Vector& p);

Matrix example_jacobian(const Vector& p);

/// The fixture as a pure map on [-0.7, 0.7]^2, named "paper-example".
VectorMap example_map();

struct ExampleBounds {
  MinorReport first;  // k = 1
  MinorReport det;    // k = 2
};

struct ResidualSample {
  double h = 0.0;
  double residual = 0.0;
};

/// Differentiability residual at the origin,
/// max over 8 directions d of |F(h d) - F(0) - JF(0) h d|_inf / |h d|_inf,
/// evaluated in long double so cancellation against 8 h stays below h^2.
std::vector<ResidualSample> example_differentiability_scan(const std::vector<double>& radii);

struct WitnessSample {
  double r = 0.0;
  double value = 0.0;  // dF1/dx(r, 0) - 8 - 3 r^2 cos(1/r^2) = 2 sin(1/r^2)
};

/// Evaluated at r = (pi/2 + k pi)^(-1/2), where the value is +-2 for every k,
/// so dF1/dx has no limit at the origin.
WitnessSample example_discontinuity_witness(std::uint64_t k);

/// audit_minors on `box` plus the fixture's proven bounds
/// min |m1| >= 3 - tol and min |det| >= 5 - tol. Throws
/// FixtureIntegrityError when a bound fails.
ExampleBounds example_minor_bounds(const BoxDomain& box, std::size_t budget, double tol = 1e-12);

}  // namespace dini
