#include "dini/function_model.hpp"

#include <cmath>
#include <limits>

#include "dini/errors.hpp"

namespace dini {

BoxDomain::BoxDomain(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw DimensionError("BoxDomain: bound sizes differ");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] <= upper[i])) {
      throw PreconditionError("BoxDomain: lower[" + std::to_string(i) + "] > upper[" +
                              std::to_string(i) + "]");
    }
  }
}

BoxDomain BoxDomain::cube(std::size_t dim, double lo, double hi) {
  return BoxDomain(Vector(dim, lo), Vector(dim, hi));
}

BoxDomain BoxDomain::inscribed_in_ball(const Vector& center, double radius) {
  const double half = radius / std::sqrt(static_cast<double>(center.size()));
  Vector lo = center, hi = center;
  for (std::size_t i = 0; i < center.size(); ++i) {
    lo[i] -= half;
    hi[i] += half;
  }
  return BoxDomain(lo, hi);
}

bool BoxDomain::contains(const Vector& p) const noexcept {
  if (p.size() != dim()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= lower[i] && p[i] <= upper[i])) return false;
  }
  return true;
}

bool BoxDomain::is_degenerate() const noexcept {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!(lower[i] < upper[i])) return true;
  return false;
}

Vector BoxDomain::center() const {
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lower[i] + upper[i]);
  return c;
}

BoxDomain BoxDomain::slice(std::size_t first, std::size_t count) const {
  return BoxDomain(lower.slice(first, count), upper.slice(first, count));
}

BoxDomain product(const BoxDomain& a, const BoxDomain& b) {
  return BoxDomain(concat(a.lower, b.lower), concat(a.upper, b.upper));
}

void DifferentiableMap::validate() const {
  if (m == 0) throw PreconditionError(name + ": map needs at least one equation");
  if (!eval) throw PreconditionError(name + ": missing eval callback");
  if (domain.dim() != n + m) {
    throw PreconditionError(name + ": domain dimension " + std::to_string(domain.dim()) +
                            " != n + m = " + std::to_string(n + m));
  }
  if (domain.is_degenerate()) throw PreconditionError(name + ": degenerate domain box");
}

void VectorMap::validate() const {
  if (dim == 0) throw PreconditionError(name + ": zero dimension");
  if (!eval) throw PreconditionError(name + ": missing eval callback");
  if (domain.dim() != dim) throw PreconditionError(name + ": domain dimension mismatch");
  if (domain.is_degenerate()) throw PreconditionError(name + ": degenerate domain box");
}

double fd_step(double v) noexcept {
  static const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
  return cbrt_eps * std::max(1.0, std::abs(v));
}

namespace {

void check_output(const Vector& out, std::size_t expected, const std::string& name) {
  if (out.size() != expected) {
    throw DimensionError(name + ": eval returned " + std::to_string(out.size()) +
                         " components, expected " + std::to_string(expected));
  }
  if (!out.all_finite()) throw EvaluationError(name + ": non-finite value");
}

// Central differences over the stacked point p; near a face of the box the
// stencil switches to the second-order one-sided formula.
template <typename Eval>
Matrix fd_generic(const Eval& eval, const Vector& p, std::size_t rows, const BoxDomain& box) {
  const Vector f0 = eval(p);
  Matrix jac(rows, p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double h = fd_step(p[j]);
    Vector q = p;
    auto at = [&](double offset) {
      q[j] = p[j] + offset;
      return eval(q);
    };
    const bool room_up = p[j] + h <= box.upper[j];
    const bool room_down = p[j] - h >= box.lower[j];
    if (room_up && room_down) {
      const Vector fp = at(h), fm = at(-h);
      for (std::size_t i = 0; i < rows; ++i) jac(i, j) = (fp[i] - fm[i]) / (2 * h);
    } else if (p[j] + 2 * h <= box.upper[j]) {
      const Vector f1 = at(h), f2 = at(2 * h);
      for (std::size_t i = 0; i < rows; ++i) jac(i, j) = (-3 * f0[i] + 4 * f1[i] - f2[i]) / (2 * h);
    } else if (p[j] - 2 * h >= box.lower[j]) {
      const Vector f1 = at(-h), f2 = at(-2 * h);
      for (std::size_t i = 0; i < rows; ++i) jac(i, j) = (3 * f0[i] - 4 * f1[i] + f2[i]) / (2 * h);
    } else {
      throw DomainError("finite differences: box too thin in coordinate " + std::to_string(j));
    }
  }
  return jac;
}

}  // namespace

Vector evaluate(const DifferentiableMap& f, const Vector& x, const Vector& y) {
  if (x.size() != f.n || y.size() != f.m) {
    throw DimensionError(f.name + ": expected x in R^" + std::to_string(f.n) + ", y in R^" +
                         std::to_string(f.m));
  }
  if (!f.domain.contains(concat(x, y))) {
    throw DomainError(f.name + ": point " + to_string(concat(x, y)) + " outside domain");
  }
  Vector out = f.eval(x, y);
  check_output(out, f.m, f.name);
  return out;
}

Vector evaluate(const VectorMap& f, const Vector& x) {
  if (x.size() != f.dim) throw DimensionError(f.name + ": dimension mismatch");
  if (!f.domain.contains(x)) {
    throw DomainError(f.name + ": point " + to_string(x) + " outside domain");
  }
  Vector out = f.eval(x);
  check_output(out, f.dim, f.name);
  return out;
}

Matrix fd_jacobian(const DifferentiableMap& f, const Vector& x, const Vector& y) {
  const Vector p = concat(x, y);
  if (!f.domain.contains(p)) {
    throw DomainError(f.name + ": point " + to_string(p) + " outside domain");
  }
  auto eval = [&](const Vector& q) { return evaluate(f, q.slice(0, f.n), q.slice(f.n, f.m)); };
  return fd_generic(eval, p, f.m, f.domain);
}

Matrix fd_jacobian(const VectorMap& f, const Vector& x) {
  if (!f.domain.contains(x)) {
    throw DomainError(f.name + ": point " + to_string(x) + " outside domain");
  }
  auto eval = [&](const Vector& q) { return evaluate(f, q); };
  return fd_generic(eval, x, f.dim, f.domain);
}

Matrix jacobian(const DifferentiableMap& f, const Vector& x, const Vector& y) {
  if (!f.jacobian) return fd_jacobian(f, x, y);
  if (x.size() != f.n || y.size() != f.m) throw DimensionError(f.name + ": dimension mismatch");
  if (!f.domain.contains(concat(x, y))) {
    throw DomainError(f.name + ": point " + to_string(concat(x, y)) + " outside domain");
  }
  Matrix j = (*f.jacobian)(x, y);
  if (j.rows() != f.m || j.cols() != f.n + f.m) {
    throw DimensionError(f.name + ": analytic Jacobian has wrong shape");
  }
  return j;
}

Matrix jacobian(const VectorMap& f, const Vector& x) {
  if (!f.jacobian) return fd_jacobian(f, x);
  if (x.size() != f.dim) throw DimensionError(f.name + ": dimension mismatch");
  if (!f.domain.contains(x)) {
    throw DomainError(f.name + ": point " + to_string(x) + " outside domain");
  }
  Matrix j = (*f.jacobian)(x);
  if (j.rows() != f.dim || j.cols() != f.dim) {
    throw DimensionError(f.name + ": analytic Jacobian has wrong shape");
  }
  return j;
}

Matrix partial_x(const DifferentiableMap& f, const Vector& x, const Vector& y) {
  return jacobian(f, x, y).block(0, 0, f.m, f.n);
}

Matrix partial_y(const DifferentiableMap& f, const Vector& x, const Vector& y) {
  return jacobian(f, x, y).block(0, f.n, f.m, f.m);
}

}  // namespace dini
