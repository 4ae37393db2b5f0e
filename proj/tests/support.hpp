#pragma once

// Test-side oracles. Nothing here calls the library's linear algebra or
// solvers, so agreement is a genuine cross-check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dini/linalg.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense dense(const dini::Matrix& a) {
  Dense d(a.rows(), std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
  return d;
}

// Gaussian elimination with partial pivoting, written out again on purpose.
inline std::vector<double> gauss_solve(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

// Laplace expansion; only used for orders <= 4.
inline double cofactor_det(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1.0 : 1.0) * a[0][j] * cofactor_det(minor);
  }
  return s;
}

using Residual = std::function<std::vector<double>(const std::vector<double>&)>;
using Jac = std::function<Dense(const std::vector<double>&)>;

// max that lets NaN through instead of dropping it
inline double worse(double acc, double v) { return std::isnan(v) || v > acc ? v : acc; }

inline double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// Damped Newton with backtracking on ||F||_inf.
inline std::vector<double> damped_newton(const Residual& f, const Jac& j, std::vector<double> y,
                                         int max_iter = 100) {
  for (int it = 0; it < max_iter; ++it) {
    const auto r = f(y);
    const double norm = inf_norm(r);
    if (norm < 1e-15) break;
    const auto step = gauss_solve(j(y), r);
    double lambda = 1.0;
    std::vector<double> trial(y.size());
    for (int k = 0; k < 40; ++k) {
      for (std::size_t i = 0; i < y.size(); ++i) trial[i] = y[i] - lambda * step[i];
      if (inf_norm(f(trial)) < norm) break;
      lambda /= 2;
    }
    if (trial == y) break;
    y = trial;
  }
  return y;
}

// The non-C^1 example written out directly in long double.
inline std::array<long double, 2> example_ld(long double x, long double y) {
  const long double s = x * x + y * y;
  if (s == 0) return {0.0L, 0.0L};
  return {8 * x + x * x * x * std::cos(1 / s), 8 * y + y * y * y * std::sin(1 / s)};
}

}  // namespace oracle

namespace gen {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline dini::Vector vec(std::mt19937_64& g, std::size_t n, double lo, double hi) {
  dini::Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(g, lo, hi);
  return v;
}

inline dini::Matrix mat(std::mt19937_64& g, std::size_t r, std::size_t c, double lo, double hi) {
  dini::Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = uniform(g, lo, hi);
  return a;
}

// Diagonally dominant, so well conditioned.
inline dini::Matrix well_conditioned(std::mt19937_64& g, std::size_t n) {
  dini::Matrix a = mat(g, n, n, -1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += (uniform(g, 0, 1) < 0.5 ? -1.0 : 1.0) * (n + 1.0);
  return a;
}

}  // namespace gen

inline double max_abs_diff(const dini::Matrix& a, const dini::Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::fabs(a.entries()[i] - b.entries()[i]));
  return m;
}

inline double max_abs_diff(const dini::Vector& a, const dini::Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

#include "dini/function_model.hpp"

inline dini::Vector sampling_point(std::mt19937_64& g, const dini::BoxDomain& box) {
  dini::Vector p(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) p[i] = gen::uniform(g, box.lower[i], box.upper[i]);
  return p;
}
