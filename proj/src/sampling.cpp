#include "dini/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "dini/errors.hpp"

namespace dini::sampling {

namespace {

constexpr std::array<unsigned, 32> kPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29,  31,
                                           37, 41, 43, 47, 53, 59, 61, 67, 71, 73,  79,
                                           83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double radical_inverse(std::uint64_t index, unsigned base) noexcept {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

std::vector<double> halton(std::uint64_t index, std::size_t dim) {
  if (dim > kPrimes.size()) throw PreconditionError("halton: dimension above 32");
  std::vector<double> u(dim);
  for (std::size_t d = 0; d < dim; ++d) u[d] = radical_inverse(index, kPrimes[d]);
  return u;
}

Vector in_box(const BoxDomain& box, const std::vector<double>& unit) {
  Vector p(box.dim());
  for (std::size_t d = 0; d < box.dim(); ++d) {
    p[d] = box.lower[d] + unit[d] * (box.upper[d] - box.lower[d]);
  }
  return p;
}

std::vector<Vector> halton_points(const BoxDomain& box, std::size_t count) {
  std::vector<Vector> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) pts.push_back(in_box(box, halton(i, box.dim())));
  return pts;
}

std::vector<Vector> corners_and_center(const BoxDomain& box) {
  const std::size_t dim = box.dim();
  if (dim > 16) throw PreconditionError("corners_and_center: dimension above 16");
  std::vector<Vector> pts;
  pts.reserve((std::size_t{1} << dim) + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Vector p(dim);
    for (std::size_t d = 0; d < dim; ++d) p[d] = (mask >> d) & 1 ? box.upper[d] : box.lower[d];
    pts.push_back(std::move(p));
  }
  pts.push_back(box.center());
  return pts;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

Vector uniform_in_box(const BoxDomain& box, std::mt19937_64& rng) {
  Vector p(box.dim());
  for (std::size_t d = 0; d < box.dim(); ++d) {
    p[d] = box.lower[d] + uniform01(rng) * (box.upper[d] - box.lower[d]);
  }
  return p;
}

std::vector<Vector> halton_disc(const Vector& center, double radius, std::size_t count) {
  if (center.size() != 2) throw DimensionError("halton_disc: center must be 2D");
  std::vector<Vector> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double r = radius * std::sqrt(radical_inverse(i, 2));
    const double theta = 2.0 * std::numbers::pi * radical_inverse(i, 3);
    pts.push_back(Vector{center[0] + r * std::cos(theta), center[1] + r * std::sin(theta)});
  }
  return pts;
}

}  // namespace dini::sampling
