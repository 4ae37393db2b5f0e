#pragma once

#include <cstddef>
#include <vector>

namespace dini {

enum class Accel { bisect, illinois };

struct SolverConfig {
  double residual_tol = 1e-11;
  /// Relative width tolerance: a bracket [lo, hi] is converged once
  /// hi - lo <= width_tol * (1 + |lo| + |hi|).
  double width_tol = 1e-13;
  std::size_t max_iter = 200;
  /// Initial bracket radius per unknown; empty means default_radius for all.
  std::vector<double> bracket_r0;
  double default_radius = 0.25;
  std::size_t max_expansions = 20;
  Accel accel = Accel::illinois;
  /// Allowed |F(a, b)| at the seed point.
  double seed_tol = 1e-8;
  /// Nested elimination costs O(iterations^m); larger systems are rejected.
  std::size_t max_unknowns = 6;

  double radius_for(std::size_t unknown) const {
    return unknown < bracket_r0.size() ? bracket_r0[unknown] : default_radius;
  }

  /// Throws PreconditionError if a tolerance is non-positive or max_iter is 0.
  void validate() const;
};

}  // namespace dini
