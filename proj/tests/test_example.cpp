#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dini/errors.hpp"
#include "dini/example_map.hpp"
#include "dini/function_model.hpp"
#include "support.hpp"

using namespace dini;

TEST_CASE("example_eval values") {
  CHECK(example_eval(Vector{0, 0}) == Vector{0, 0});
  const Vector v = example_eval(Vector{0.6, 0.8});
  // 1/(x^2 + y^2) = 1
  const long double u = 4.8L + 0.216L * std::cos(1.0L), w = 6.4L + 0.512L * std::sin(1.0L);
  CHECK(std::fabs(v[0] - static_cast<double>(u)) < 1e-14);
  CHECK(std::fabs(v[1] - static_cast<double>(w)) < 1e-14);
  CHECK(v[0] == doctest::Approx(4.91671).epsilon(1e-5));
  CHECK(v[1] == doctest::Approx(6.83086).epsilon(1e-5));
  CHECK_THROWS_AS(example_eval(Vector{1.0}), DimensionError);
}

TEST_CASE("property: odd symmetry is exact") {
  auto g = gen::rng(81);
  for (int t = 0; t < 200; ++t) {
    const Vector p = gen::vec(g, 2, -0.7, 0.7);
    CHECK(example_eval(-1.0 * p) == -1.0 * example_eval(p));
  }
}

TEST_CASE("example_jacobian against FD") {
  CHECK(example_jacobian(Vector{0, 0}) == Matrix{{8, 0}, {0, 8}});
  CHECK(example_jacobian(Vector{1e-80, 0}) == Matrix{{8, 0}, {0, 8}});

  VectorMap no_analytic = example_map();
  no_analytic.jacobian.reset();
  // sign of the (2,1) entry in particular
  const Matrix at = example_jacobian(Vector{0.3, 0.2});
  const Matrix fd = fd_jacobian(no_analytic, Vector{0.3, 0.2});
  CHECK(max_abs_diff(at, fd) < 1e-5);
  CHECK(at(1, 0) < 0);

  auto g = gen::rng(82);
  for (int t = 0; t < 100; ++t) {
    const Vector p = gen::vec(g, 2, -0.7, 0.7);
    if (p.norm_inf() < 0.2) continue;  // FD cannot resolve the oscillation near 0
    CHECK(max_abs_diff(example_jacobian(p), fd_jacobian(no_analytic, p)) < 1e-5);
  }
}

TEST_CASE("example_minor_bounds") {
  const ExampleBounds big = example_minor_bounds(BoxDomain::cube(2, -0.7, 0.7), 5000);
  CHECK(big.first.min_abs >= 3.0);
  CHECK(big.det.min_abs >= 5.0);

  const ExampleBounds origin = example_minor_bounds(BoxDomain::point(Vector{0, 0}), 10);
  CHECK(origin.first.min_abs == 8.0);
  CHECK(origin.det.min_abs == 64.0);

  const ExampleBounds small = example_minor_bounds(BoxDomain::cube(2, -0.1, 0.1), 1000);
  CHECK(small.det.min_abs >= 5.0);
}

TEST_CASE("differentiability at the origin, residual below |h|^2") {
  std::vector<double> radii;
  for (double h = 1e-1; h >= 1e-8 * 0.99; h /= std::sqrt(10.0)) radii.push_back(h);
  for (const auto& s : example_differentiability_scan(radii)) {
    INFO("h = " << s.h);
    CHECK(s.residual <= s.h * s.h);
  }
  // independent long double check along one direction
  for (long double h = 1e-1L; h > 1e-9L; h /= 10) {
    const auto f = oracle::example_ld(h, -2 * h);
    const long double r = std::max(std::fabs(f[0] - 8 * h), std::fabs(f[1] + 16 * h)) / (2 * h);
    CHECK(r <= 5 * h * h);
  }
}

TEST_CASE("Jacobian discontinuity witness") {
  bool plus = false, minus = false;
  for (std::uint64_t k = 318310; k <= 1000000; k += 9973) {
    const WitnessSample w = example_discontinuity_witness(k);
    REQUIRE(w.r < 1e-3);
    CHECK(std::fabs(w.value) >= 1.9);
    // 2 sin(pi/2 + k pi) = 2 (-1)^k
    CHECK(w.value == doctest::Approx(k % 2 ? -2.0 : 2.0).epsilon(1e-6));
    plus = plus || w.value >= 1.9;
    minus = minus || w.value <= -1.9;
  }
  CHECK(plus);
  CHECK(minus);
}
