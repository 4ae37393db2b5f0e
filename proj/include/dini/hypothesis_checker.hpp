#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dini/function_model.hpp"

namespace dini {

// Sampling can refute the hypotheses but never certify them, so the best
// verdict is "no violation found".
enum class Verdict { no_violation_found, violation_found };

std::string_view to_string(Verdict v);

struct MinorReport {
  std::size_t k = 0;         // minor order
  double min_abs = 0.0;
  Vector argmin;             // (x, y) where min_abs was attained
  std::size_t samples = 0;   // points evaluated successfully
  std::size_t skipped = 0;   // points whose evaluation failed
  bool sign_change = false;  // minor took both strict signs
  double violation_tol = 0.0;
  Verdict verdict = Verdict::no_violation_found;
};

/// Leading principal minors of dF/dy at `budget` Halton points of `box`
/// plus its corners and center, one report per order k = 1..m. Points must
/// lie in f.domain; failures are skipped and counted.
/// violation_tol = rel_tol * (1 + median |minor_k|).
std::vector<MinorReport> audit_minors(const DifferentiableMap& f, const BoxDomain& box,
                                      std::size_t budget, double rel_tol = 1e-9);

/// Same, evaluated by the serial reference loop.
std::vector<MinorReport> audit_minors_serial(const DifferentiableMap& f, const BoxDomain& box,
                                             std::size_t budget, double rel_tol = 1e-9);

struct MixedReport {
  std::size_t trials = 0;
  std::size_t skipped = 0;
  double min_abs_det = 0.0;
  std::vector<Vector> worst_points;  // xi_ij, row-major m x m
  Matrix worst_matrix;
  bool sign_change = false;
  double violation_tol = 0.0;
  Verdict verdict = Verdict::no_violation_found;
};

/// Per trial, entry (i, j) of an m x m matrix is dF_i/dy_j at its own
/// uniformly drawn point of `box`; reports the smallest |det|. Trial t draws
/// from an RNG stream derived from (rng_seed, t) only.
MixedReport audit_mixed_determinant(const DifferentiableMap& f, const BoxDomain& box,
                                    std::size_t trials, std::uint64_t rng_seed,
                                    double rel_tol = 1e-9);

MixedReport audit_mixed_determinant_serial(const DifferentiableMap& f, const BoxDomain& box,
                                           std::size_t trials, std::uint64_t rng_seed,
                                           double rel_tol = 1e-9);

struct Segment {
  Vector p;
  Vector q;
};

struct MeanValueRow {
  std::size_t segment = 0;
  std::size_t row = 0;
  double t = 0.0;  // c = p + t (q - p)
  double residual = 0.0;  // |<grad F_i(c), p - q> - (F_i(p) - F_i(q))|
  bool found = false;
};

struct MeanValueReport {
  std::size_t segments = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  std::vector<MeanValueRow> rows;
};

/// Row-wise mean-value points on each segment (over all n + m coordinates):
/// a t in [0, 1] with <grad F_i(p + t(q - p)), p - q> = F_i(p) - F_i(q),
/// located by scanning for a sign change and a bracketed solve.
MeanValueReport audit_mean_value_segments(const DifferentiableMap& f,
                                          const std::vector<Segment>& segments,
                                          double tol = 1e-7);

/// Random segments with both ends uniform in `box`.
MeanValueReport audit_mean_value_matrix(const DifferentiableMap& f, const BoxDomain& box,
                                        std::size_t pair_budget, std::uint64_t rng_seed,
                                        double tol = 1e-7);

}  // namespace dini
