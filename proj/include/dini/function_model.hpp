#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "dini/linalg.hpp"

namespace dini {

/// Axis-aligned box standing in for the open set a map lives on.
/// Degenerate boxes (lower == upper in some coordinate) are allowed for
/// audits; map domains must be non-degenerate.
struct BoxDomain {
  Vector lower;
  Vector upper;

  BoxDomain() = default;
  BoxDomain(Vector lower, Vector upper);

  static BoxDomain cube(std::size_t dim, double lo, double hi);
  static BoxDomain point(const Vector& p) { return BoxDomain(p, p); }
  /// Largest axis-aligned box inscribed in the ball B(center; radius).
  static BoxDomain inscribed_in_ball(const Vector& center, double radius);

  std::size_t dim() const noexcept { return lower.size(); }
  bool contains(const Vector& p) const noexcept;
  bool is_degenerate() const noexcept;
  Vector center() const;
  /// Coordinates [first, first + count) as a box.
  BoxDomain slice(std::size_t first, std::size_t count) const;
};

BoxDomain product(const BoxDomain& a, const BoxDomain& b);

using EvalFn = std::function<Vector(const Vector& x, const Vector& y)>;
using JacobianFn = std::function<Matrix(const Vector& x, const Vector& y)>;

/// F: Omega in R^n x R^m -> R^m with an optional analytic Jacobian laid out
/// as [dF/dx | dF/dy] (m x (n+m)). Callbacks must be reentrant.
struct DifferentiableMap {
  std::size_t n = 0;
  std::size_t m = 0;
  EvalFn eval;
  std::optional<JacobianFn> jacobian;
  BoxDomain domain;  // over (x, y), dimension n + m
  std::string name;

  /// Throws PreconditionError on inconsistent dimensions or a degenerate box.
  void validate() const;
};

using VectorEvalFn = std::function<Vector(const Vector& x)>;
using VectorJacobianFn = std::function<Matrix(const Vector& x)>;

/// Pure map F: R^n -> R^n (inverse-function setting).
struct VectorMap {
  std::size_t dim = 0;
  VectorEvalFn eval;
  std::optional<VectorJacobianFn> jacobian;
  BoxDomain domain;
  std::string name;

  void validate() const;
};

/// F(x, y). Throws DomainError outside the box and EvaluationError on
/// non-finite output.
Vector evaluate(const DifferentiableMap& f, const Vector& x, const Vector& y);
Vector evaluate(const VectorMap& f, const Vector& x);

/// Analytic Jacobian when available, otherwise central differences.
Matrix jacobian(const DifferentiableMap& f, const Vector& x, const Vector& y);
Matrix jacobian(const VectorMap& f, const Vector& x);

/// Always finite differences, even when an analytic Jacobian exists.
Matrix fd_jacobian(const DifferentiableMap& f, const Vector& x, const Vector& y);
Matrix fd_jacobian(const VectorMap& f, const Vector& x);

Matrix partial_x(const DifferentiableMap& f, const Vector& x, const Vector& y);
Matrix partial_y(const DifferentiableMap& f, const Vector& x, const Vector& y);

/// FD step for coordinate value v: cbrt(eps) * max(1, |v|).
double fd_step(double v) noexcept;

}  // namespace dini
