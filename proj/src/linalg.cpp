#include "dini/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "dini/errors.hpp"

namespace dini {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw EvaluationError(std::string(what) + ": non-finite entry");
    }
  }
}

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square() || m.rows() == 0) {
    throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// In-place partially pivoted LU. Row swaps are recorded in `perm`.
struct PivotedLu {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  double smallest_pivot = INFINITY;
  bool exactly_singular = false;

  explicit PivotedLu(const Matrix& a) : lu(a), perm(a.rows()) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu(k, k));
      for (std::size_t r = k + 1; r < n; ++r) {
        if (std::abs(lu(r, k)) > best) {
          best = std::abs(lu(r, k));
          p = r;
        }
      }
      smallest_pivot = std::min(smallest_pivot, best);
      if (best == 0.0) {
        exactly_singular = true;
        continue;
      }
      if (p != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(p, c));
        std::swap(perm[k], perm[p]);
        sign = -sign;
      }
      const double pivot = lu(k, k);
      for (std::size_t r = k + 1; r < n; ++r) {
        const double factor = lu(r, k) / pivot;
        lu(r, k) = factor;
        if (factor == 0.0) continue;
        for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
      }
    }
  }
};

double max_row_norm(const Matrix& a) { return a.norm_inf(); }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim, double fill) : data_(dim, fill) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::initializer_list<double> values) : data_(values) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::vector<double> values) : data_(std::move(values)) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::span<const double> values) : data_(values.begin(), values.end()) {
  require_finite(data_, "Vector");
}

Vector Vector::slice(std::size_t first, std::size_t count) const {
  if (first + count > data_.size()) throw DimensionError("Vector::slice out of range");
  return Vector(std::span<const double>(data_).subspan(first, count));
}

double Vector::norm_inf() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Vector::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Vector concat(const Vector& a, const Vector& b) {
  std::vector<double> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Vector(std::move(out));
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("Vector +: size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("Vector -: size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  require_finite(data_, "Matrix");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("Matrix: entry count " + std::to_string(data_.size()) +
                         " != " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  require_finite(data_, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, "Matrix");
}

Matrix Matrix::identity(std::size_t order) {
  Matrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(const Vector& v) {
  return Matrix(v.size(), 1, v.values());
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Vector Matrix::col(std::size_t c) const {
  if (c >= cols_) throw DimensionError("Matrix::col out of range");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

double Matrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("Matrix *: inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("Matrix * Vector: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("Matrix +: shape mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-1.0) * b; }

Matrix operator*(double s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row count mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------- determinants, solves

double det(const Matrix& m) {
  require_square(m, "det");
  PivotedLu f(m);
  if (f.exactly_singular) return 0.0;
  double d = f.sign;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= f.lu(i, i);
  return d;
}

std::vector<double> leading_principal_minors(const Matrix& m) {
  require_square(m, "leading_principal_minors");
  const std::size_t n = m.rows();
  const double threshold = kSingularRelTol * max_row_norm(m);
  std::vector<double> minors(n);

  // Without row exchanges the k-th pivot is minor_k / minor_{k-1}.
  Matrix work = m;
  double running = 1.0;
  std::size_t k = 0;
  for (; k < n; ++k) {
    const double pivot = work(k, k);
    if (std::abs(pivot) <= threshold) break;
    running *= pivot;
    minors[k] = running;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = work(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) work(r, c) -= factor * work(k, c);
    }
  }
  for (; k < n; ++k) minors[k] = det(m.leading(k + 1));

  minors[n - 1] = det(m);
  return minors;
}

Matrix solve_linear(const Matrix& a, const Matrix& b) {
  require_square(a, "solve_linear");
  if (b.rows() != a.rows()) {
    throw DimensionError("solve_linear: rhs has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(a.rows()));
  }
  const std::size_t n = a.rows();
  PivotedLu f(a);
  const double threshold = kSingularRelTol * max_row_norm(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double pivot = f.lu(i, i);
    if (f.exactly_singular || std::abs(pivot) <= threshold) {
      const double mag = f.exactly_singular ? 0.0 : std::abs(pivot);
      std::ostringstream os;
      os << "solve_linear: singular matrix, pivot magnitude " << mag << " <= " << threshold;
      throw SingularityError(os.str(), mag);
    }
  }

  Matrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * z[j];
      z[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = z[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x(j, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

Vector solve_linear(const Matrix& a, const Vector& b) {
  return solve_linear(a, Matrix::column(b)).col(0);
}

Matrix invert(const Matrix& a) {
  require_square(a, "invert");
  return solve_linear(a, Matrix::identity(a.rows()));
}

}  // namespace dini
