#include "dini/scalar_root.hpp"

#include <cmath>
#include <sstream>

#include "dini/errors.hpp"

namespace dini {

void SolverConfig::validate() const {
  if (!(residual_tol > 0) || !(width_tol > 0) || !(seed_tol > 0) || !(default_radius > 0)) {
    throw PreconditionError("SolverConfig: tolerances and radii must be positive");
  }
  for (double r : bracket_r0) {
    if (!(r > 0)) throw PreconditionError("SolverConfig: bracket radii must be positive");
  }
  if (max_iter < 1) throw PreconditionError("SolverConfig: max_iter must be >= 1");
}

namespace {

int sign_of(double v) noexcept { return (v > 0) - (v < 0); }

double checked_eval(const ScalarFn& psi, double t) {
  const double v = psi(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite function value at " << t;
    throw EvaluationError(os.str());
  }
  return v;
}

}  // namespace

int monotone_direction(const Bracket& b) noexcept { return b.f_lo < 0 ? 1 : -1; }

Bracket make_bracket(const ScalarFn& psi, double center, double r0, std::size_t max_expansions,
                     Limits limits) {
  if (!(r0 > 0)) throw PreconditionError("make_bracket: r0 must be positive");
  if (!(center >= limits.lo && center <= limits.hi)) {
    throw PreconditionError("make_bracket: center outside limits");
  }
  const double f_center = checked_eval(psi, center);
  if (f_center == 0.0) return {center, center, 0.0, 0.0};

  double lo = center, hi = center, f_lo = f_center, f_hi = f_center;
  for (std::size_t k = 0; k <= max_expansions; ++k) {
    const double r = std::ldexp(r0, static_cast<int>(k));
    const double new_lo = std::max(center - r, limits.lo);
    const double new_hi = std::min(center + r, limits.hi);
    if (new_lo != lo) {
      lo = new_lo;
      f_lo = checked_eval(psi, lo);
      if (f_lo == 0.0) return {lo, lo, 0.0, 0.0};
    }
    if (new_hi != hi) {
      hi = new_hi;
      f_hi = checked_eval(psi, hi);
      if (f_hi == 0.0) return {hi, hi, 0.0, 0.0};
    }
    if (lo < hi && sign_of(f_lo) * sign_of(f_hi) < 0) return {lo, hi, f_lo, f_hi};
    if (lo == limits.lo && hi == limits.hi) break;
  }

  std::ostringstream os;
  os.precision(17);
  os << "no sign change on [" << lo << ", " << hi << "] (f = " << f_lo << ", " << f_hi << ")";
  throw BracketError(os.str(), lo, hi, f_lo, f_hi);
}

RootResult solve_monotone(const ScalarFn& psi, const Bracket& b, const SolverConfig& cfg) {
  if (b.is_exact_root()) return {b.lo, 0.0, 0, 0.0};
  if (!(b.lo < b.hi) || sign_of(b.f_lo) * sign_of(b.f_hi) >= 0) {
    throw PreconditionError("solve_monotone: bracket without strict sign change");
  }

  const double tol = cfg.width_tol * (1.0 + std::abs(b.lo) + std::abs(b.hi));
  double a = b.lo, c = b.hi;
  // fa/fc drive the secant (Illinois may halve them); the true values are kept
  // only for the sign tests, which halving does not change.
  double fa = b.f_lo, fc = b.f_hi;
  int last_side = 0;
  bool force_bisect = false;
  double width_two_back = c - a, width_one_back = c - a;

  double best = 0.5 * (a + c);
  double best_f = INFINITY;
  std::size_t it = 0;
  bool converged = false;

  while (true) {
    if (c - a <= tol) {
      converged = true;
      break;
    }
    if (it >= cfg.max_iter) break;
    ++it;

    double m;
    if (cfg.accel == Accel::bisect || force_bisect) {
      m = a + 0.5 * (c - a);
    } else {
      m = (a * fc - c * fa) / (fc - fa);
      if (!(m > a && m < c)) m = a + 0.5 * (c - a);
    }
    if (!(m > a && m < c)) {
      // Bracket is down to adjacent doubles.
      converged = true;
      break;
    }

    const double fm = checked_eval(psi, m);
    if (std::abs(fm) < best_f) {
      best = m;
      best_f = std::abs(fm);
    }
    if (fm == 0.0) return {m, 0.0, it, c - a};

    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
      if (last_side == -1) fc *= 0.5;
      last_side = -1;
    } else {
      c = m;
      fc = fm;
      if (last_side == 1) fa *= 0.5;
      last_side = 1;
    }

    const double width = c - a;
    force_bisect = cfg.accel == Accel::illinois && width > 0.5 * width_two_back;
    width_two_back = width_one_back;
    width_one_back = width;
  }

  if (best_f == INFINITY) {
    // Started within tolerance: report the midpoint.
    best = a + 0.5 * (c - a);
    best_f = std::abs(checked_eval(psi, best));
  }
  const double residual = psi(best);
  if (converged || std::abs(residual) <= cfg.residual_tol) {
    return {best, residual, it, c - a};
  }
  std::ostringstream os;
  os.precision(17);
  os << "bracketed solve did not converge in " << cfg.max_iter << " iterations; width " << (c - a)
     << ", best residual " << residual;
  throw ConvergenceError(os.str(), {best}, residual);
}

}  // namespace dini
