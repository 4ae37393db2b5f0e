#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dini/dini_solver.hpp"
#include "dini/function_model.hpp"

namespace dini {

/// Local inverse G of F: R^n -> R^n near y0 = F(x0).
struct InverseProblem {
  VectorMap f;
  Vector x0;
  Vector y0;
  SolverConfig config;

  /// Throws PreconditionError unless ||F(x0) - y0||_inf <= config.seed_tol.
  void validate() const;
};

/// y0 is taken as F(x0).
InverseProblem make_inverse_problem(VectorMap f, Vector x0, SolverConfig config = {});

/// Phi(y, x) = F(x) - y with y as the independent block and x as the
/// unknowns, so dPhi/d(unknowns) = JF(x). `y_box` bounds the targets.
DifferentiableMap embed(const VectorMap& f, const BoxDomain& y_box);

/// Embedding with an effectively unbounded target box.
DifferentiableMap embed(const VectorMap& f);

/// The pure map viewed as F(x, y) with no independent variables (n = 0):
/// partial_y is JF, so hypothesis audits apply directly.
DifferentiableMap as_map(const VectorMap& f);

ImplicitProblem as_implicit(const InverseProblem& p);

/// x = G(y) with ||F(x) - y||_inf <= n * residual_tol. Solver errors
/// propagate.
Vector invert_at(const InverseProblem& p, const Vector& y);

/// JG(y) = JF(x)^{-1} at x = G(y).
Matrix inverse_jacobian(const InverseProblem& p, const Vector& y, const Vector& x);

struct RoundTripPoint {
  Vector x;
  bool ok = false;
  double round_trip_error = 0.0;  // ||G(F(x)) - x||_inf
  double jacobian_error = 0.0;    // ||JG(F(x)) JF(x) - I||_inf
  FailureKind failure = FailureKind::none;
  std::string message;
};

struct RoundTripReport {
  std::vector<RoundTripPoint> points;
  double max_round_trip = 0.0;
  double max_jacobian_error = 0.0;
  std::size_t failures = 0;
};

RoundTripPoint round_trip_at(const InverseProblem& p, const Vector& x);

RoundTripReport round_trip_check(const InverseProblem& p, const std::vector<Vector>& xs);

}  // namespace dini
