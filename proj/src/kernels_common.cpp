#include <cmath>

#include "dini/kernels.hpp"
#include "dini/sampling.hpp"

namespace dini::kernels {

MinorSample minor_sample(const DifferentiableMap& f, const Vector& p) {
  MinorSample s;
  try {
    const Matrix dy = partial_y(f, p.slice(0, f.n), p.slice(f.n, f.m));
    s.minors = leading_principal_minors(dy);
    s.ok = true;
  } catch (const std::exception&) {
    s.ok = false;
  }
  return s;
}

MixedTrial mixed_trial(const DifferentiableMap& f, const BoxDomain& box, std::uint64_t seed,
                       std::size_t trial) {
  MixedTrial t;
  auto rng = sampling::stream(seed, trial);
  const std::size_t m = f.m;
  t.points.reserve(m * m);
  for (std::size_t k = 0; k < m * m; ++k) t.points.push_back(sampling::uniform_in_box(box, rng));
  try {
    Matrix mixed(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Vector& xi = t.points[i * m + j];
        mixed(i, j) = partial_y(f, xi.slice(0, f.n), xi.slice(f.n, m))(i, j);
      }
    }
    t.det = det(mixed);
    t.matrix = std::move(mixed);
    t.ok = true;
  } catch (const std::exception&) {
    t.ok = false;
  }
  return t;
}

std::vector<MinorSample> sample_minors(const DifferentiableMap& f, const std::vector<Vector>& points,
                                       Exec exec) {
  return exec == Exec::serial ? serial::sample_minors(f, points) : omp::sample_minors(f, points);
}

std::vector<MixedTrial> mixed_trials(const DifferentiableMap& f, const BoxDomain& box,
                                     std::size_t trials, std::uint64_t seed, Exec exec) {
  return exec == Exec::serial ? serial::mixed_trials(f, box, trials, seed)
                              : omp::mixed_trials(f, box, trials, seed);
}

std::vector<GridPointResult> solve_points(const ImplicitProblem& p, const std::vector<Vector>& xs,
                                          Exec exec) {
  return exec == Exec::serial ? serial::solve_points(p, xs) : omp::solve_points(p, xs);
}

std::vector<RoundTripPoint> round_trips(const InverseProblem& p, const std::vector<Vector>& xs,
                                        Exec exec) {
  return exec == Exec::serial ? serial::round_trips(p, xs) : omp::round_trips(p, xs);
}

}  // namespace dini::kernels
