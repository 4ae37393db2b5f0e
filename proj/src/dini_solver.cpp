#include "dini/dini_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

#include "dini/errors.hpp"
#include "dini/kernels.hpp"

namespace dini {

void ImplicitProblem::validate() const {
  f.validate();
  config.validate();
  if (a.size() != f.n || b.size() != f.m) {
    throw PreconditionError("ImplicitProblem: seed dimensions do not match the map");
  }
  if (f.m > config.max_unknowns) {
    throw PreconditionError("ImplicitProblem: " + std::to_string(f.m) +
                            " unknowns exceeds max_unknowns = " +
                            std::to_string(config.max_unknowns));
  }
  if (!f.domain.contains(concat(a, b))) {
    throw PreconditionError("ImplicitProblem: seed (a, b) outside the domain");
  }
  const double r = evaluate(f, a, b).norm_inf();
  if (r > config.seed_tol) {
    std::ostringstream os;
    os << "ImplicitProblem: |F(a, b)| = " << r << " exceeds seed_tol " << config.seed_tol;
    throw PreconditionError(os.str());
  }
}

ImplicitProblem make_problem(DifferentiableMap f, Vector a, Vector b, SolverConfig config) {
  ImplicitProblem p{std::move(f), std::move(a), std::move(b), std::move(config)};
  p.validate();
  return p;
}

// ------------------------------------------------------------ ImplicitSection

struct ImplicitSection::Cache {
  std::map<std::vector<std::uint64_t>, double> values;
  std::size_t solves = 0;
};

namespace {

std::vector<std::uint64_t> key_of(const Vector& x, const Vector& y_rest) {
  std::vector<std::uint64_t> key;
  key.reserve(x.size() + y_rest.size());
  for (double v : x) key.push_back(std::bit_cast<std::uint64_t>(v));
  for (double v : y_rest) key.push_back(std::bit_cast<std::uint64_t>(v));
  return key;
}

Limits limits_for(const DifferentiableMap& f, std::size_t unknown) {
  return {f.domain.lower[f.n + unknown], f.domain.upper[f.n + unknown]};
}

[[noreturn]] void rethrow_located(const BracketError& e, std::size_t equation, const Vector& x,
                                  const Vector& y_rest) {
  std::ostringstream os;
  os << "equation " << equation << " at x = " << to_string(x);
  if (!y_rest.empty()) os << ", remaining unknowns = " << to_string(y_rest);
  os << ": " << e.what();
  BracketError located(os.str(), e.lo, e.hi, e.f_lo, e.f_hi);
  located.equation = equation;
  located.x = x.values();
  located.y_rest = y_rest.values();
  throw located;
}

// One bracketed scalar solve of component 0 of `f` in unknown 0, the other
// unknowns fixed at y_rest.
double solve_first_equation(const DifferentiableMap& f, const Vector& x, const Vector& y_rest,
                            double center, const SolverConfig& cfg, std::size_t equation) {
  Vector y(f.m);
  for (std::size_t j = 0; j < y_rest.size(); ++j) y[j + 1] = y_rest[j];
  ScalarFn psi = [&](double t) {
    y[0] = t;
    return evaluate(f, x, y)[0];
  };
  try {
    const Limits lim = limits_for(f, 0);
    const double c = std::clamp(center, lim.lo, lim.hi);
    const Bracket br = make_bracket(psi, c, cfg.radius_for(equation - 1), cfg.max_expansions, lim);
    return solve_monotone(psi, br, cfg).root;
  } catch (const BracketError& e) {
    if (e.equation != 0) throw;
    rethrow_located(e, equation, x, y_rest);
  }
}

// Elimination at depth `level` (0-based) of the original system. Returns the
// unknowns of `f` and counts scalar solves.
Vector solve_level(const DifferentiableMap& f, const Vector& x, const Vector& seed,
                   const SolverConfig& cfg, std::size_t level, std::size_t& solves) {
  if (f.m == 1) {
    ++solves;
    return Vector{solve_first_equation(f, x, Vector(), seed[0], cfg, level + 1)};
  }
  ImplicitSection phi(f, seed[0], cfg, level + 1);
  const DifferentiableMap reduced = reduced_system(f, phi);
  const Vector rest = solve_level(reduced, x, seed.slice(1, f.m - 1), cfg, level + 1, solves);
  const double y1 = phi(x, rest);
  solves += phi.solves();
  return concat(Vector{y1}, rest);
}

}  // namespace

ImplicitSection::ImplicitSection(DifferentiableMap f, double center, SolverConfig config,
                                 std::size_t equation_index)
    : f_(std::move(f)),
      center_(center),
      config_(std::move(config)),
      equation_(equation_index),
      cache_(std::make_shared<Cache>()) {}

double ImplicitSection::operator()(const Vector& x, const Vector& y_rest) const {
  auto key = key_of(x, y_rest);
  if (auto it = cache_->values.find(key); it != cache_->values.end()) return it->second;
  const double v = solve_first_equation(f_, x, y_rest, center_, config_, equation_);
  ++cache_->solves;
  cache_->values.emplace(std::move(key), v);
  return v;
}

std::size_t ImplicitSection::solves() const noexcept { return cache_->solves; }

DifferentiableMap reduced_system(const DifferentiableMap& f, const ImplicitSection& phi) {
  if (f.m < 2) throw PreconditionError("reduced_system: needs at least two equations");
  DifferentiableMap r;
  r.n = f.n;
  r.m = f.m - 1;
  r.name = f.name + "/reduced";
  r.domain = product(f.domain.slice(0, f.n), f.domain.slice(f.n + 1, f.m - 1));
  r.eval = [f, phi](const Vector& x, const Vector& y_rest) {
    const double y1 = phi(x, y_rest);
    const Vector full = evaluate(f, x, concat(Vector{y1}, y_rest));
    return full.slice(1, full.size() - 1);
  };
  return r;
}

// -------------------------------------------------------------- solve_implicit

ImplicitValue solve_implicit(const ImplicitProblem& p, const Vector& x,
                             const std::optional<Vector>& seed) {
  const DifferentiableMap& f = p.f;
  if (x.size() != f.n) throw DimensionError("solve_implicit: x has wrong dimension");
  if (f.m > p.config.max_unknowns) {
    throw PreconditionError("solve_implicit: too many unknowns for nested elimination");
  }
  const BoxDomain xbox = f.domain.slice(0, f.n);
  if (!xbox.contains(x)) throw DomainError("solve_implicit: x = " + to_string(x) + " outside domain");
  const Vector& start = seed ? *seed : p.b;
  if (start.size() != f.m) throw DimensionError("solve_implicit: seed has wrong dimension");

  std::size_t solves = 0;
  const Vector y = solve_level(f, x, start, p.config, 0, solves);
  const double residual = evaluate(f, x, y).norm_inf();
  const double allowed = static_cast<double>(f.m) * p.config.residual_tol;
  if (!(residual <= allowed)) {
    std::ostringstream os;
    os << "solve_implicit: residual " << residual << " exceeds " << allowed << " at x = "
       << to_string(x);
    throw ConvergenceError(os.str(), y.values(), residual);
  }
  return {y, residual, solves};
}

Matrix implicit_jacobian(const ImplicitProblem& p, const Vector& x, const Vector& y) {
  const Matrix dy = partial_y(p.f, x, y);
  const Matrix dx = partial_x(p.f, x, y);
  try {
    return -1.0 * solve_linear(dy, dx);
  } catch (const SingularityError& e) {
    std::ostringstream os;
    os << e.what() << "; leading minors of dF/dy:";
    for (double v : leading_principal_minors(dy)) os << ' ' << v;
    throw SingularityError(os.str(), e.pivot());
  }
}

// ------------------------------------------------------------------- grids

std::string_view to_string(FailureKind k) {
  switch (k) {
    case FailureKind::none:
      return "none";
    case FailureKind::bracket:
      return "bracket-failure";
    case FailureKind::convergence:
      return "convergence-failure";
    case FailureKind::domain:
      return "domain-error";
    case FailureKind::evaluation:
      return "evaluation-error";
    case FailureKind::singular:
      return "singular";
    case FailureKind::other:
      return "error";
  }
  return "error";
}

GridPointResult solve_point(const ImplicitProblem& p, const Vector& x,
                            const std::optional<Vector>& seed) {
  GridPointResult r;
  try {
    r.value = solve_implicit(p, x, seed);
  } catch (const BracketError& e) {
    r.failure = FailureKind::bracket;
    r.message = e.what();
  } catch (const ConvergenceError& e) {
    r.failure = FailureKind::convergence;
    r.message = e.what();
  } catch (const DomainError& e) {
    r.failure = FailureKind::domain;
    r.message = e.what();
  } catch (const EvaluationError& e) {
    r.failure = FailureKind::evaluation;
    r.message = e.what();
  } catch (const SingularityError& e) {
    r.failure = FailureKind::singular;
    r.message = e.what();
  } catch (const std::exception& e) {
    r.failure = FailureKind::other;
    r.message = e.what();
  }
  return r;
}

std::vector<GridPointResult> solve_on_grid(const ImplicitProblem& p, const std::vector<Vector>& grid,
                                           bool continuation) {
  if (!continuation) return kernels::solve_points(p, grid, kernels::Exec::parallel);

  std::vector<GridPointResult> out;
  out.reserve(grid.size());
  for (const Vector& x : grid) {
    std::optional<Vector> seed;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!out[j].ok()) continue;
      const double d = (grid[j] - x).norm_inf();
      if (d < nearest) {
        nearest = d;
        seed = out[j].value->y;
      }
    }
    out.push_back(solve_point(p, x, seed));
  }
  return out;
}

}  // namespace dini
