#pragma once

#include <vector>

#include "sss/matrix.hpp"

namespace sss {

/// Thin SVD, X = U diag(sigma) V^T with r = min(rows, cols) factors.
/// singular_values are nonincreasing and >= 0; both bases have orthonormal
/// columns. Column signs follow one convention: the largest-magnitude entry of
/// each left singular vector is nonnegative.
struct SvdResult {
  Matrix left_basis;                    // rows x r
  std::vector<double> singular_values;  // length r
  Matrix right_basis;                   // cols x r
};

/// One-sided Jacobi (Hestenes) SVD. Deterministic: fixed sweep order, no
/// threading, so repeated calls on the same input are bit-identical.
/// Throws NonFinite on NaN/Inf input, ConvergenceFailure if the sweeps do not
/// settle (pathological input).
SvdResult svd(const Matrix& m);

/// sum_ij (a_ij - b_ij)^2. Throws ShapeMismatch.
double frobenius_distance_sq(const Matrix& a, const Matrix& b);

/// y = A x  (column-major accumulation).
void gemv(const Matrix& a, const double* x, double* y);

/// A += alpha * u v^T
void add_outer_scaled(Matrix& a, const double* u, const double* v, double alpha);

}  // namespace sss
