#pragma once

// Data-parallel loops. Each kernel has a serial reference loop and an OpenMP
// loop over the same per-index body; results are stored by index, so both
// produce identical output.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dini/dini_solver.hpp"
#include "dini/inverse_solver.hpp"

namespace dini::kernels {

enum class Exec { serial, parallel };

struct MinorSample {
  bool ok = false;
  std::vector<double> minors;
};

struct MixedTrial {
  bool ok = false;
  double det = 0.0;
  std::vector<Vector> points;  // row-major m x m
  Matrix matrix;
};

// Per-index bodies shared by both loops.
MinorSample minor_sample(const DifferentiableMap& f, const Vector& p);
MixedTrial mixed_trial(const DifferentiableMap& f, const BoxDomain& box, std::uint64_t seed,
                       std::size_t trial);

std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points,
                                       Exec exec);
std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed, Exec exec);
std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs,
                                          Exec exec);
std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs,
                                        Exec exec);

namespace serial {
std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points);
std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed);
std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs);
std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs);
}  // namespace serial

namespace omp {
std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points);
std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed);
std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs);
std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs);
}  // namespace omp

/// Worker count for the OpenMP loops (0 keeps the runtime default).
void set_threads(int threads);
int max_threads();

}  // namespace dini::kernels
