#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dini {

/// Fixed-length real coordinate tuple. Entries are checked finite when the
/// vector is built from existing data; element writes are not re-checked.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);
  explicit Vector(std::span<const double> values);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> span() noexcept { return data_; }
  std::span<const double> span() const noexcept { return data_; }
  const std::vector<double>& values() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  /// Sub-range [first, first + count).
  Vector slice(std::size_t first, std::size_t count) const;

  double norm_inf() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

Vector concat(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& v);
double dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t order);
  static Matrix diagonal(const Vector& d);
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix leading(std::size_t k) const { return block(0, 0, k, k); }
  Vector col(std::size_t c) const;

  double norm_inf() const noexcept;  // max absolute row sum
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
/// Column-wise concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);
std::string to_string(const Matrix& m);

/// Relative pivot threshold: a pivot p is singular when
/// |p| <= kSingularRelTol * (max row inf-norm of the input).
inline constexpr double kSingularRelTol = 1e-12;

/// Determinant by partially pivoted LU. Exactly singular columns give 0.
double det(const Matrix& m);

/// Entry k-1 is the determinant of the top-left k x k block.
std::vector<double> leading_principal_minors(const Matrix& m);

/// Solves a X = b with partial pivoting. Throws SingularityError when a pivot
/// is at or below the relative threshold.
Matrix solve_linear(const Matrix& a, const Matrix& b);
Vector solve_linear(const Matrix& a, const Vector& b);

Matrix invert(const Matrix& a);

}  // namespace dini
