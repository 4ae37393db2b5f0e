#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dini {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A pivot fell below the singularity threshold.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double pivot)
      : Error(what), pivot_(pivot) {}
  double pivot() const noexcept { return pivot_; }

 private:
  double pivot_;
};

/// A point was outside the map's domain box.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A map or expression produced a non-finite value or hit a math domain
/// restriction (log of non-positive, division by zero, ...).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No strict sign change was found while expanding a bracket.
///
/// `equation` is the 1-based equation index in the original system, 0 when
/// the failure comes from a free-standing scalar search.
class BracketError : public Error {
 public:
  BracketError(const std::string& what, double lo, double hi, double f_lo,
               double f_hi)
      : Error(what), lo(lo), hi(hi), f_lo(f_lo), f_hi(f_hi) {}

  double lo, hi, f_lo, f_hi;
  std::size_t equation = 0;
  std::vector<double> x;       // independent variables at failure
  std::vector<double> y_rest;  // remaining unknowns held fixed
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best,
                   double residual)
      : Error(what), best(std::move(best)), residual(residual) {}

  std::vector<double> best;
  double residual;
};

/// Example fixture violated one of its own proven bounds.
class FixtureIntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dini
