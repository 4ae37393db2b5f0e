#include "dini/hypothesis_checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dini/errors.hpp"
#include "dini/kernels.hpp"
#include "dini/sampling.hpp"
#include "dini/scalar_root.hpp"

namespace dini {

std::string_view to_string(Verdict v) {
  return v == Verdict::violation_found ? "violation-found" : "no-violation-found";
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

std::vector<MinorReport> summarize_minors(const std::vector<Vector>& points,
                                          const std::vector<kernels::MinorSample>& samples,
                                          std::size_t m, double rel_tol) {
  std::vector<MinorReport> reports(m);
  for (std::size_t k = 0; k < m; ++k) {
    MinorReport& r = reports[k];
    r.k = k + 1;
    r.min_abs = std::numeric_limits<double>::infinity();
    std::vector<double> magnitudes;
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!samples[i].ok) {
        ++r.skipped;
        continue;
      }
      const double v = samples[i].minors[k];
      pos = pos || v > 0;
      neg = neg || v < 0;
      magnitudes.push_back(std::abs(v));
      if (std::abs(v) < r.min_abs) {
        r.min_abs = std::abs(v);
        r.argmin = points[i];
      }
    }
    r.samples = magnitudes.size();
    if (r.samples == 0) throw EvaluationError("audit_minors: no sample point could be evaluated");
    r.sign_change = pos && neg;
    r.violation_tol = rel_tol * (1.0 + median(std::move(magnitudes)));
    r.verdict = (r.min_abs <= r.violation_tol || r.sign_change) ? Verdict::violation_found
                                                                : Verdict::no_violation_found;
  }
  return reports;
}

std::vector<MinorReport> audit_minors_impl(const DifferentiableMap& f, const BoxDomain& box,
                                           std::size_t budget, double rel_tol, kernels::Exec exec) {
  if (budget < 1) throw PreconditionError("audit_minors: budget must be >= 1");
  if (box.dim() != f.n + f.m) throw DimensionError("audit_minors: box dimension != n + m");
  std::vector<Vector> points = sampling::halton_points(box, budget);
  for (Vector& c : sampling::corners_and_center(box)) points.push_back(std::move(c));
  const auto samples = kernels::sample_minors(f, points, exec);
  return summarize_minors(points, samples, f.m, rel_tol);
}

MixedReport audit_mixed_impl(const DifferentiableMap& f, const BoxDomain& box, std::size_t trials,
                             std::uint64_t rng_seed, double rel_tol, kernels::Exec exec) {
  if (trials < 1) throw PreconditionError("audit_mixed_determinant: trials must be >= 1");
  if (box.dim() != f.n + f.m) throw DimensionError("audit_mixed_determinant: box dimension != n + m");
  const auto results = kernels::mixed_trials(f, box, trials, rng_seed, exec);

  MixedReport r;
  r.trials = trials;
  r.min_abs_det = std::numeric_limits<double>::infinity();
  std::vector<double> magnitudes;
  bool pos = false, neg = false;
  for (const auto& t : results) {
    if (!t.ok) {
      ++r.skipped;
      continue;
    }
    pos = pos || t.det > 0;
    neg = neg || t.det < 0;
    magnitudes.push_back(std::abs(t.det));
    if (std::abs(t.det) < r.min_abs_det) {
      r.min_abs_det = std::abs(t.det);
      r.worst_points = t.points;
      r.worst_matrix = t.matrix;
    }
  }
  if (magnitudes.empty()) throw EvaluationError("audit_mixed_determinant: every trial failed");
  r.sign_change = pos && neg;
  r.violation_tol = rel_tol * (1.0 + median(std::move(magnitudes)));
  r.verdict = (r.min_abs_det <= r.violation_tol || r.sign_change) ? Verdict::violation_found
                                                                  : Verdict::no_violation_found;
  return r;
}

}  // namespace

std::vector<MinorReport> audit_minors(const DifferentiableMap& f, const BoxDomain& box,
                                      std::size_t budget, double rel_tol) {
  return audit_minors_impl(f, box, budget, rel_tol, kernels::Exec::parallel);
}

std::vector<MinorReport> audit_minors_serial(const DifferentiableMap& f, const BoxDomain& box,
                                             std::size_t budget, double rel_tol) {
  return audit_minors_impl(f, box, budget, rel_tol, kernels::Exec::serial);
}

MixedReport audit_mixed_determinant(const DifferentiableMap& f, const BoxDomain& box,
                                    std::size_t trials, std::uint64_t rng_seed, double rel_tol) {
  return audit_mixed_impl(f, box, trials, rng_seed, rel_tol, kernels::Exec::parallel);
}

MixedReport audit_mixed_determinant_serial(const DifferentiableMap& f, const BoxDomain& box,
                                           std::size_t trials, std::uint64_t rng_seed,
                                           double rel_tol) {
  return audit_mixed_impl(f, box, trials, rng_seed, rel_tol, kernels::Exec::serial);
}

// ------------------------------------------------------------- mean value

namespace {

constexpr std::size_t kInitialScan = 64;
constexpr std::size_t kMaxScan = 4096;

struct SegmentRows {
  const DifferentiableMap& f;
  const Segment& s;
  Vector diff;  // p - q
  Vector target;  // F(p) - F(q)

  double g(std::size_t row, double t) const {
    const Vector c = s.p + t * (s.q - s.p);
    const Matrix j = jacobian(f, c.slice(0, f.n), c.slice(f.n, f.m));
    double v = 0.0;
    for (std::size_t k = 0; k < diff.size(); ++k) v += j(row, k) * diff[k];
    return v - target[row];
  }
};

MeanValueRow locate_row(const SegmentRows& seg, std::size_t row, std::size_t segment_index,
                        double tol) {
  MeanValueRow out;
  out.segment = segment_index;
  out.row = row;
  out.residual = std::numeric_limits<double>::infinity();

  SolverConfig cfg;
  for (std::size_t n = kInitialScan; n <= kMaxScan; n *= 4) {
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(n);
      values[k] = seg.g(row, t);
      if (std::abs(values[k]) < out.residual) {
        out.residual = std::abs(values[k]);
        out.t = t;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (values[k] == 0.0 || (values[k] < 0) == (values[k + 1] < 0) || values[k + 1] == 0.0) continue;
      const double lo = static_cast<double>(k) / static_cast<double>(n);
      const double hi = static_cast<double>(k + 1) / static_cast<double>(n);
      const ScalarFn psi = [&](double t) { return seg.g(row, t); };
      const RootResult root = solve_monotone(psi, Bracket{lo, hi, values[k], values[k + 1]}, cfg);
      if (std::abs(root.residual) < out.residual) {
        out.residual = std::abs(root.residual);
        out.t = root.root;
      }
      break;
    }
    if (out.residual <= tol) break;
  }
  out.found = out.residual <= tol;
  return out;
}

}  // namespace

MeanValueReport audit_mean_value_segments(const DifferentiableMap& f,
                                          const std::vector<Segment>& segments, double tol) {
  MeanValueReport report;
  report.segments = segments.size();
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Segment& seg = segments[s];
    try {
      const Vector fp = evaluate(f, seg.p.slice(0, f.n), seg.p.slice(f.n, f.m));
      const Vector fq = evaluate(f, seg.q.slice(0, f.n), seg.q.slice(f.n, f.m));
      const SegmentRows rows{f, seg, seg.p - seg.q, fp - fq};
      for (std::size_t i = 0; i < f.m; ++i) {
        MeanValueRow r = locate_row(rows, i, s, tol);
        report.max_residual = std::max(report.max_residual, r.residual);
        if (!r.found) ++report.failures;
        report.rows.push_back(r);
      }
    } catch (const std::exception&) {
      for (std::size_t i = 0; i < f.m; ++i) {
        report.rows.push_back({s, i, 0.0, std::numeric_limits<double>::infinity(), false});
        ++report.failures;
      }
      report.max_residual = std::numeric_limits<double>::infinity();
    }
  }
  return report;
}

MeanValueReport audit_mean_value_matrix(const DifferentiableMap& f, const BoxDomain& box,
                                        std::size_t pair_budget, std::uint64_t rng_seed, double tol) {
  if (pair_budget < 1) throw PreconditionError("audit_mean_value_matrix: pair_budget must be >= 1");
  std::vector<Segment> segments;
  segments.reserve(pair_budget);
  for (std::size_t k = 0; k < pair_budget; ++k) {
    auto rng = sampling::stream(rng_seed, k);
    Vector p = sampling::uniform_in_box(box, rng);
    Vector q = sampling::uniform_in_box(box, rng);
    segments.push_back({std::move(p), std::move(q)});
  }
  return audit_mean_value_segments(f, segments, tol);
}

}  // namespace dini
