#include "dini/kernels.hpp"

namespace dini::kernels::serial {

std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points) {
  std::vector<MinorSample> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = minor_sample(f, points[i]);
  return out;
}

std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed) {
  std::vector<MixedTrial> out(trials);
  for (std::size_t t = 0; t < trials; ++t) out[t] = mixed_trial(f, box, seed, t);
  return out;
}

std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs) {
  std::vector<GridPointResult> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = solve_point(p, xs[i]);
  return out;
}

std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs) {
  std::vector<RoundTripPoint> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = round_trip_at(p, xs[i]);
  return out;
}

}  // namespace dini::kernels::serial
