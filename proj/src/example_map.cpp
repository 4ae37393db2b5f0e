#include "dini/example_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dini/errors.hpp"
#include "dini/inverse_solver.hpp"

namespace dini {

Vector example_eval(const Vector& p) {
  if (p.size() != 2) throw DimensionError("example_eval: expected a 2D point");
  const auto [u, v] = example_eval_t(p[0], p[1]);
  return Vector{u, v};
}

Matrix example_jacobian(const Vector& p) {
  if (p.size() != 2) throw DimensionError("example_jacobian: expected a 2D point");
  const double x = p[0], y = p[1];
  const double s = x * x + y * y;
  if (s < kExampleOriginCutoff) return Matrix{{8.0, 0.0}, {0.0, 8.0}};
  const double inv = 1.0 / s;
  const double c = std::cos(inv), sn = std::sin(inv);
  const double s2 = s * s;
  return Matrix{
      {8 + 3 * x * x * c + 2 * x * x * x * x / s2 * sn, 2 * x * x * x * y / s2 * sn},
      {-2 * x * y * y * y / s2 * c, 8 + 3 * y * y * sn - 2 * y * y * y * y / s2 * c},
  };
}

VectorMap example_map() {
  VectorMap f;
  f.dim = 2;
  f.name = "paper-example";
  f.eval = example_eval;
  f.jacobian = example_jacobian;
  f.domain = BoxDomain::cube(2, -kExampleHalfWidth, kExampleHalfWidth);
  return f;
}

std::vector<ResidualSample> example_differentiability_scan(const std::vector<double>& radii) {
  std::vector<ResidualSample> out;
  for (double h : radii) {
    long double worst = 0;
    for (int d = 0; d < 8; ++d) {
      const long double angle = 0.3L + d * std::numbers::pi_v<long double> / 4;
      const long double dx = h * std::cos(angle), dy = h * std::sin(angle);
      const auto [u, v] = example_eval_t<long double>(dx, dy);
      const long double num = std::max(std::fabs(u - 8 * dx), std::fabs(v - 8 * dy));
      worst = std::max(worst, num / std::max(std::fabs(dx), std::fabs(dy)));
    }
    out.push_back({h, static_cast<double>(worst)});
  }
  return out;
}

WitnessSample example_discontinuity_witness(std::uint64_t k) {
  const double r = 1.0 / std::sqrt(std::numbers::pi / 2 + static_cast<double>(k) * std::numbers::pi);
  const double j11 = example_jacobian(Vector{r, 0.0})(0, 0);
  return {r, j11 - 8.0 - 3 * r * r * std::cos(1.0 / (r * r))};
}

ExampleBounds example_minor_bounds(const BoxDomain& box, std::size_t budget, double tol) {
  const auto reports = audit_minors(as_map(example_map()), box, budget);
  ExampleBounds b{reports.at(0), reports.at(1)};
  if (b.first.min_abs < 3.0 - tol || b.det.min_abs < 5.0 - tol) {
    std::ostringstream os;
    os << "example fixture: minor bounds violated (min |m1| = " << b.first.min_abs
       << ", min |det| = " << b.det.min_abs << ")";
    throw FixtureIntegrityError(os.str());
  }
  return b;
}

}  // namespace dini
