#include "dini/inverse_solver.hpp"

#include <sstream>

#include "dini/errors.hpp"
#include "dini/kernels.hpp"

namespace dini {

namespace {

// Targets are unconstrained; finite bounds keep Vector's finiteness invariant.
constexpr double kUnbounded = 1e300;

}  // namespace

void InverseProblem::validate() const {
  f.validate();
  config.validate();
  if (x0.size() != f.dim || y0.size() != f.dim) {
    throw PreconditionError("InverseProblem: seed dimensions do not match the map");
  }
  if (!f.domain.contains(x0)) throw PreconditionError("InverseProblem: x0 outside the domain");
  const double r = (evaluate(f, x0) - y0).norm_inf();
  if (r > config.seed_tol) {
    std::ostringstream os;
    os << "InverseProblem: |F(x0) - y0| = " << r << " exceeds seed_tol " << config.seed_tol;
    throw PreconditionError(os.str());
  }
}

InverseProblem make_inverse_problem(VectorMap f, Vector x0, SolverConfig config) {
  f.validate();
  Vector y0 = evaluate(f, x0);
  InverseProblem p{std::move(f), std::move(x0), std::move(y0), std::move(config)};
  p.validate();
  return p;
}

DifferentiableMap embed(const VectorMap& f, const BoxDomain& y_box) {
  if (y_box.dim() != f.dim) throw DimensionError("embed: target box dimension mismatch");
  DifferentiableMap phi;
  phi.n = f.dim;
  phi.m = f.dim;
  phi.name = f.name + "/inverse";
  phi.domain = product(y_box, f.domain);
  phi.eval = [f](const Vector& y, const Vector& x) { return f.eval(x) - y; };
  const std::size_t n = f.dim;
  phi.jacobian = [f, n](const Vector& /*y*/, const Vector& x) {
    const Matrix jf = jacobian(f, x);
    return hconcat(-1.0 * Matrix::identity(n), jf);
  };
  return phi;
}

DifferentiableMap embed(const VectorMap& f) {
  return embed(f, BoxDomain::cube(f.dim, -kUnbounded, kUnbounded));
}

DifferentiableMap as_map(const VectorMap& f) {
  DifferentiableMap g;
  g.n = 0;
  g.m = f.dim;
  g.name = f.name;
  g.domain = f.domain;
  g.eval = [f](const Vector& /*x*/, const Vector& y) { return f.eval(y); };
  if (f.jacobian) {
    g.jacobian = [f](const Vector& /*x*/, const Vector& y) { return (*f.jacobian)(y); };
  }
  return g;
}

ImplicitProblem as_implicit(const InverseProblem& p) {
  return ImplicitProblem{embed(p.f), p.y0, p.x0, p.config};
}

Vector invert_at(const InverseProblem& p, const Vector& y) {
  if (y.size() != p.f.dim) throw DimensionError("invert_at: target has wrong dimension");
  return solve_implicit(as_implicit(p), y).y;
}

Matrix inverse_jacobian(const InverseProblem& p, const Vector& /*y*/, const Vector& x) {
  const Matrix jf = jacobian(p.f, x);
  try {
    return invert(jf);
  } catch (const SingularityError& e) {
    std::ostringstream os;
    os << e.what() << "; leading minors of JF:";
    for (double v : leading_principal_minors(jf)) os << ' ' << v;
    throw SingularityError(os.str(), e.pivot());
  }
}

RoundTripPoint round_trip_at(const InverseProblem& p, const Vector& x) {
  RoundTripPoint out;
  out.x = x;
  try {
    const Vector y = evaluate(p.f, x);
    const Vector gx = invert_at(p, y);
    out.round_trip_error = (gx - x).norm_inf();
    const Matrix jg = inverse_jacobian(p, y, gx);
    const Matrix jf = jacobian(p.f, gx);
    out.jacobian_error = (jg * jf - Matrix::identity(p.f.dim)).norm_inf();
    out.ok = true;
  } catch (const BracketError& e) {
    out.failure = FailureKind::bracket;
    out.message = e.what();
  } catch (const ConvergenceError& e) {
    out.failure = FailureKind::convergence;
    out.message = e.what();
  } catch (const SingularityError& e) {
    out.failure = FailureKind::singular;
    out.message = e.what();
  } catch (const DomainError& e) {
    out.failure = FailureKind::domain;
    out.message = e.what();
  } catch (const std::exception& e) {
    out.failure = FailureKind::other;
    out.message = e.what();
  }
  return out;
}

RoundTripReport round_trip_check(const InverseProblem& p, const std::vector<Vector>& xs) {
  RoundTripReport r;
  r.points = kernels::round_trips(p, xs, kernels::Exec::parallel);
  for (const auto& pt : r.points) {
    if (!pt.ok) {
      ++r.failures;
      continue;
    }
    r.max_round_trip = std::max(r.max_round_trip, pt.round_trip_error);
    r.max_jacobian_error = std::max(r.max_jacobian_error, pt.jacobian_error);
  }
  return r;
}

}  // namespace dini
