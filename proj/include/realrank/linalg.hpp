#pragma once

// Small dense real matrices. Sizes in this library stay in the dozens, so the
// routines favour accuracy (one-sided Jacobi) over speed.

#include <cstddef>
#include <vector>

namespace realrank {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<double>& data() const { return data_; }

  Matrix transpose() const;
  std::vector<double> column(std::size_t c) const;
  std::vector<double> row(std::size_t r) const;
  double frobenius_norm() const;
  double max_abs() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Thin SVD a = u · diag(s) · vᵀ with s descending, k = min(rows, cols).
struct Svd {
  Matrix u;               // rows × k
  std::vector<double> s;  // k
  Matrix v;               // cols × k
};

Svd svd(const Matrix& a);
std::vector<double> singular_values(const Matrix& a);

// Count of singular values above tol·σ_max (0 for the zero matrix).
std::size_t numeric_rank(const Matrix& a, double tol = 1e-8);

// Minimum-norm least-squares solution of a·x ≈ b (pseudo-inverse, cutoff rcond·σ_max).
std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b, double rcond = 1e-12);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

}  // namespace realrank
