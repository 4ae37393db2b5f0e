#include <omp.h>

#include "dini/kernels.hpp"

namespace dini::kernels {

namespace omp {

// Bodies never throw (failures are recorded per index), so nothing escapes
// the parallel regions.

std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points) {
  std::vector<MinorSample> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = minor_sample(f, points[i]);
  return out;
}

std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed) {
  std::vector<MixedTrial> out(trials);
  const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < n; ++t) out[t] = mixed_trial(f, box, seed, static_cast<std::size_t>(t));
  return out;
}

std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs) {
  std::vector<GridPointResult> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = solve_point(p, xs[i]);
  return out;
}

std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs) {
  std::vector<RoundTripPoint> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = round_trip_at(p, xs[i]);
  return out;
}

}  // namespace omp

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace dini::kernels
