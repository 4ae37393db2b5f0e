#pragma once

#include <cstddef>
#include <functional>
#include <limits>

#include "dini/solver_config.hpp"

namespace dini {

using ScalarFn = std::function<double(double)>;

/// Interval with a strict sign change of psi at its ends. The only allowed
/// degenerate state is an exact root: lo == hi and f_lo == f_hi == 0.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  bool is_exact_root() const noexcept { return lo == hi && f_lo == 0.0 && f_hi == 0.0; }
  double width() const noexcept { return hi - lo; }
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // psi(root)
  std::size_t iterations = 0;
  double width = 0.0;  // final bracket width
};

/// Admissible interval for the unknown; expansions are clipped to it.
struct Limits {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// Tries [center - r, center + r] for r = r0 * 2^k, k = 0..max_expansions,
/// clipped to `limits`. An exact zero at the center or an endpoint returns a
/// degenerate bracket at that point. Throws BracketError when no strict sign
/// change is found.
Bracket make_bracket(const ScalarFn& psi, double center, double r0,
                     std::size_t max_expansions = 20, Limits limits = {});

/// Bracketed root of a function with a single sign change in `b`: bisection,
/// or Illinois-modified regula falsi when cfg.accel is Accel::illinois. The
/// bracket invariant holds at every step.
RootResult solve_monotone(const ScalarFn& psi, const Bracket& b, const SolverConfig& cfg);

/// +1 if psi goes from negative to positive across b, -1 otherwise.
int monotone_direction(const Bracket& b) noexcept;

}  // namespace dini
