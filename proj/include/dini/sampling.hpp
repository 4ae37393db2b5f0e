#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dini/function_model.hpp"

namespace dini::sampling {

/// Radical inverse of `index` in base `base` (van der Corput).
double radical_inverse(std::uint64_t index, unsigned base) noexcept;

/// Point `index` (1-based) of the Halton sequence in [0,1)^dim, bases are
/// the first `dim` primes. Supports dim <= 32.
std::vector<double> halton(std::uint64_t index, std::size_t dim);

/// Affine image of a unit-cube point in the box.
Vector in_box(const BoxDomain& box, const std::vector<double>& unit);

/// `count` Halton points in the box, indices 1..count. Prefixes of longer
/// sequences are identical.
std::vector<Vector> halton_points(const BoxDomain& box, std::size_t count);

/// All 2^dim corners (dim <= 16) followed by the center.
std::vector<Vector> corners_and_center(const BoxDomain& box);

/// Independent generator for stream `index` derived from `seed` by
/// splitmix64, so per-index draws do not depend on execution order.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vector uniform_in_box(const BoxDomain& box, std::mt19937_64& rng);

/// First `count` points of a 2D Halton sequence mapped to the disc of the
/// given radius around `center` (area-preserving polar map).
std::vector<Vector> halton_disc(const Vector& center, double radius, std::size_t count);

}  // namespace dini::sampling
