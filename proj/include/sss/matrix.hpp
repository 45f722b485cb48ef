#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "sss/errors.hpp"

namespace sss {

/// Dense real matrix, column-major. Data matrices store one point per column
/// (column j = x_j in R^rows), so the hot loops run over contiguous columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return v_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const { return v_[c * rows_ + r]; }

  double* col(std::size_t j) { return v_.data() + j * rows_; }
  const double* col(std::size_t j) const { return v_.data() + j * rows_; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

inline bool all_finite(const Matrix& m) {
  const double* p = m.data();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::isfinite(p[i])) return false;
  return true;
}

inline void require_finite(const Matrix& m, const char* who) {
  if (!all_finite(m)) throw Error(ErrorCode::NonFinite, std::string(who) + ": matrix has NaN/Inf entries");
}

Matrix transpose(const Matrix& m);

/// C = A * B, plain column-major accumulation.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Columns of `m` selected by `keep` (one bool per column), in original order.
Matrix select_columns(const Matrix& m, const std::vector<bool>& keep);

/// Columns of `m` at `idx`, in the given order.
Matrix gather_columns(const Matrix& m, const std::vector<std::size_t>& idx);

double frobenius_norm_sq(const Matrix& m);

}  // namespace sss
