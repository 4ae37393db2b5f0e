#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dini/function_model.hpp"
#include "dini/scalar_root.hpp"
#include "dini/solver_config.hpp"

namespace dini {

/// F(x, y) = 0 near a known solution (a, b).
struct ImplicitProblem {
  DifferentiableMap f;
  Vector a;  // R^n
  Vector b;  // R^m
  SolverConfig config;

  /// Checks dimensions, that (a, b) lies in the domain and that
  /// ||F(a, b)||_inf <= config.seed_tol. Throws PreconditionError.
  void validate() const;
};

ImplicitProblem make_problem(DifferentiableMap f, Vector a, Vector b, SolverConfig config = {});

struct ImplicitValue {
  Vector y;
  double residual = 0.0;  // ||F(x, y)||_inf
  std::size_t inner_solves = 0;  // scalar bracketed solves performed
};

/// g(x) by eliminating y1 first: y1 = phi(x, y') solves F1 = 0, the remaining
/// equations become F_i(x, phi(x, y'), y') = 0 in y', recursively, down to a
/// single bracketed scalar solve. Every scalar bracket is centred at the seed
/// (problem.b, or `seed` when given) with radii from the config.
///
/// Throws BracketError (with the 1-based equation index and the point) when a
/// level finds no sign change, ConvergenceError when the final residual
/// exceeds m * residual_tol.
ImplicitValue solve_implicit(const ImplicitProblem& p, const Vector& x,
                             const std::optional<Vector>& seed = std::nullopt);

/// Jg(x) = -[dF/dy]^{-1} [dF/dx] at (x, y). Throws SingularityError with the
/// leading minors of dF/dy in the message when dF/dy is singular.
Matrix implicit_jacobian(const ImplicitProblem& p, const Vector& x, const Vector& y);

enum class FailureKind { none, bracket, convergence, domain, evaluation, singular, other };

std::string_view to_string(FailureKind k);

struct GridPointResult {
  std::optional<ImplicitValue> value;
  FailureKind failure = FailureKind::none;
  std::string message;

  bool ok() const noexcept { return value.has_value(); }
};

/// Solves at every grid point, results in grid order. With continuation the
/// seed of each solve is the solution at the nearest previously solved point
/// (sequential); without it the points are independent and run in parallel.
std::vector<GridPointResult> solve_on_grid(const ImplicitProblem& p, const std::vector<Vector>& grid,
                                           bool continuation);

/// Solves one point and classifies failures instead of throwing.
GridPointResult solve_point(const ImplicitProblem& p, const Vector& x,
                            const std::optional<Vector>& seed = std::nullopt);

/// y1 = phi(x, y') solving F1(x, y1, y') = 0, bracketed around `center`.
/// Results are memoized per instance; copies share the cache. Not
/// thread-safe.
class ImplicitSection {
 public:
  /// `equation_index` (1-based) labels bracket failures and selects the
  /// bracket radius from the config.
  ImplicitSection(DifferentiableMap f, double center, SolverConfig config,
                  std::size_t equation_index = 1);

  double operator()(const Vector& x, const Vector& y_rest) const;
  std::size_t solves() const noexcept;
  const DifferentiableMap& map() const noexcept { return f_; }

 private:
  struct Cache;
  DifferentiableMap f_;
  double center_;
  SolverConfig config_;
  std::size_t equation_;
  std::shared_ptr<Cache> cache_;
};

/// (F_2, ..., F_m)(x, phi(x, y'), y') as a map with n inputs and m - 1
/// unknowns, Jacobian by finite differences. Requires m >= 2.
DifferentiableMap reduced_system(const DifferentiableMap& f, const ImplicitSection& phi);

}  // namespace dini
