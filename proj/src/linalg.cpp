#include "realrank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "realrank/errors.hpp"

namespace realrank {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "matrix data length does not match its size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<double> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

double Matrix::frobenius_norm() const { return norm2(data_); }

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x) {
  if (a.cols_ != x.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  std::vector<double> out(a.rows_, 0.0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(const std::vector<double>& a) {
  // Scaled accumulation keeps tiny and huge entries from under/overflowing.
  double scale = 0.0, ssq = 1.0;
  for (double v : a) {
    if (v == 0.0) continue;
    const double av = std::fabs(v);
    if (scale < av) {
      ssq = 1.0 + ssq * (scale / av) * (scale / av);
      scale = av;
    } else {
      ssq += (av / scale) * (av / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

namespace {

// Hestenes one-sided Jacobi on a tall matrix (rows ≥ cols).
Svd jacobi_tall(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<double>> cols(n), vcols(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    cols[j] = a.column(j);
    vcols[j][j] = 1.0;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += cols[p][i] * cols[p][i];
          beta += cols[q][i] * cols[q][i];
          gamma += cols[p][i] * cols[q][i];
        }
        if (gamma == 0.0 || std::fabs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double xp = cols[p][i], xq = cols[q][i];
          cols[p][i] = c * xp - s * xq;
          cols[q][i] = s * xp + c * xq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = vcols[p][i], vq = vcols[q][i];
          vcols[p][i] = c * vp - s * vq;
          vcols[q][i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = norm2(cols[j]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sv[x] > sv[y]; });
  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.s[k] = sv[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = vcols[j][i];
    if (sv[j] > 0.0)
      for (std::size_t i = 0; i < m; ++i) out.u(i, k) = cols[j][i] / sv[j];
  }
  // Columns of u belonging to zero singular values are completed to an
  // orthonormal set so callers can rely on uᵀu = I.
  for (std::size_t k = 0; k < n; ++k) {
    if (out.s[k] > 0.0) continue;
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<double> cand(m, 0.0);
      cand[e] = 1.0;
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        if (k2 == k || (out.s[k2] == 0.0 && k2 > k)) continue;
        double proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += out.u(i, k2) * cand[i];
        for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * out.u(i, k2);
      }
      const double nn = norm2(cand);
      if (nn > 1e-6) {
        for (std::size_t i = 0; i < m; ++i) out.u(i, k) = cand[i] / nn;
        break;
      }
    }
  }
  return out;
}

}  // namespace

Svd svd(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {Matrix(a.rows(), 0), {}, Matrix(a.cols(), 0)};
  if (a.rows() >= a.cols()) return jacobi_tall(a);
  Svd t = jacobi_tall(a.transpose());
  return {std::move(t.v), std::move(t.s), std::move(t.u)};
}

std::vector<double> singular_values(const Matrix& a) { return svd(a).s; }

std::size_t numeric_rank(const Matrix& a, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "rank tolerance must be positive");
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > tol * s.front(); }));
}

std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b, double rcond) {
  if (a.rows() != b.size()) fail(ErrorCode::DimensionMismatch, "least squares: rows of A and b differ");
  const Svd d = svd(a);
  std::vector<double> x(a.cols(), 0.0);
  if (d.s.empty() || d.s.front() == 0.0) return x;
  for (std::size_t k = 0; k < d.s.size(); ++k) {
    if (d.s[k] <= rcond * d.s.front()) break;
    double coef = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) coef += d.u(i, k) * b[i];
    coef /= d.s[k];
    for (std::size_t j = 0; j < a.cols(); ++j) x[j] += coef * d.v(j, k);
  }
  return x;
}

}  // namespace realrank
