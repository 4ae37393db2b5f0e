#include <doctest.h>

#include <cmath>

#include "dini/builtins.hpp"
#include "dini/example_map.hpp"
#include "dini/kernels.hpp"
#include "dini/sampling.hpp"

using namespace dini;

TEST_CASE("Halton sequence") {
  CHECK(sampling::radical_inverse(1, 2) == 0.5);
  CHECK(sampling::radical_inverse(3, 2) == 0.75);
  CHECK(sampling::radical_inverse(1, 3) == doctest::Approx(1.0 / 3));
  const auto h = sampling::halton(5, 2);
  CHECK(h[0] == 0.625);
  CHECK(h[1] == doctest::Approx(7.0 / 9));

  const BoxDomain box = BoxDomain::cube(3, -1, 2);
  const auto a = sampling::halton_points(box, 50), b = sampling::halton_points(box, 80);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(box.contains(a[i]));
  }
  const auto cc = sampling::corners_and_center(box);
  CHECK(cc.size() == 9);
  CHECK(cc.back() == Vector{0.5, 0.5, 0.5});
}

TEST_CASE("random streams depend only on seed and index") {
  auto s1 = sampling::stream(7, 3), s2 = sampling::stream(7, 3), s3 = sampling::stream(7, 4);
  const double u1 = sampling::uniform01(s1), u2 = sampling::uniform01(s2), u3 = sampling::uniform01(s3);
  CHECK(u1 == u2);
  CHECK(u1 != u3);
  CHECK(u1 >= 0.0);
  CHECK(u1 < 1.0);
}

TEST_CASE("disc points stay in the disc") {
  const auto pts = sampling::halton_disc(Vector{1, -1}, 0.4, 300);
  CHECK(pts.size() == 300);
  double far = 0;
  for (const auto& p : pts) far = std::max(far, std::hypot(p[0] - 1, p[1] + 1));
  CHECK(far <= 0.4);
  CHECK(far > 0.35);
}

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  const auto f = coupled3_map();
  const auto pts = sampling::halton_points(f.domain, 500);
  const auto s = kernels::sample_minors(f, pts, kernels::Exec::serial);
  const auto p = kernels::sample_minors(f, pts, kernels::Exec::parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].ok == p[i].ok);
    CHECK(s[i].minors == p[i].minors);
  }

  const auto ms = kernels::mixed_trials(f, f.domain, 300, 4, kernels::Exec::serial);
  const auto mp = kernels::mixed_trials(f, f.domain, 300, 4, kernels::Exec::parallel);
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].det == mp[i].det);

  const Builtin b = builtin("coupled3");
  const auto prob = make_problem(*b.implicit, b.a, b.b);
  std::vector<Vector> xs;
  for (int i = 0; i < 40; ++i) xs.push_back(Vector{-0.8 + i * 0.04});
  const auto ss = kernels::solve_points(prob, xs, kernels::Exec::serial);
  const auto sp = kernels::solve_points(prob, xs, kernels::Exec::parallel);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    REQUIRE(ss[i].ok());
    CHECK(ss[i].value->y == sp[i].value->y);
  }

  const auto inv = make_inverse_problem(example_map(), Vector{0, 0});
  const auto disc = sampling::halton_disc(Vector{0, 0}, 0.4, 50);
  const auto rs = kernels::round_trips(inv, disc, kernels::Exec::serial);
  const auto rp = kernels::round_trips(inv, disc, kernels::Exec::parallel);
  for (std::size_t i = 0; i < disc.size(); ++i) CHECK(rs[i].round_trip_error == rp[i].round_trip_error);

  kernels::set_threads(2);
  CHECK(kernels::max_threads() == 2);
  const auto p2 = kernels::sample_minors(f, pts, kernels::Exec::parallel);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].minors == p2[i].minors);
  kernels::set_threads(0);
}
