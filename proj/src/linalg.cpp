#include "sss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sss/kernels.hpp"

namespace sss {
namespace {

constexpr double kJacobiTol = 1e-14;   // relative off-diagonal threshold
constexpr int kMaxSweeps = 60;
constexpr double kRankZeroRel = 1e-13; // columns below this (relative) get a completed basis vector

/// One-sided Jacobi on the columns of a (m x k, m >= k). On return the columns
/// of a are pairwise orthogonal and v holds the accumulated right rotations,
/// i.e. a_in = a_out * v^T.
void jacobi_orthogonalize(Matrix& a, Matrix& v) {
  const auto& ops = kernels::active();
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  v = Matrix::identity(k);
  if (k < 2) return;

  std::vector<double> norms(k);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t j = 0; j < k; ++j) norms[j] = ops.nrm2_sq(a.col(j), m);
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double app = norms[p];
        const double aqq = norms[q];
        if (app == 0.0 || aqq == 0.0) continue;
        const double apq = ops.dot(a.col(p), a.col(q), m);
        if (std::fabs(apq) <= kJacobiTol * std::sqrt(app) * std::sqrt(aqq)) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        ops.rot(a.col(p), a.col(q), c, s, m);
        ops.rot(v.col(p), v.col(q), c, s, k);
        // exact update of the rotated column norms
        norms[p] = std::max(0.0, app - t * apq);
        norms[q] = std::max(0.0, aqq + t * apq);
        rotated = true;
      }
    }
    if (!rotated) converged = true;
  }
  if (!converged)
    throw Error(ErrorCode::ConvergenceFailure, "svd: Jacobi sweeps did not converge");
}

/// Deterministic orthonormal completion for (numerically) zero columns:
/// Gram-Schmidt of consecutive standard basis vectors against accepted columns.
void complete_basis(Matrix& u, const std::vector<bool>& needs_fill) {
  const auto& ops = kernels::active();
  const std::size_t m = u.rows();
  const std::size_t k = u.cols();
  std::size_t cand = 0;
  std::vector<double> work(m);
  for (std::size_t j = 0; j < k; ++j) {
    if (!needs_fill[j]) continue;
    for (; cand < m; ++cand) {
      std::fill(work.begin(), work.end(), 0.0);
      work[cand] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t l = 0; l < k; ++l) {
          if (needs_fill[l] && l >= j) continue;  // only project on columns already in place
          const double proj = ops.dot(u.col(l), work.data(), m);
          ops.axpy(-proj, u.col(l), work.data(), m);
        }
      const double nrm = std::sqrt(ops.nrm2_sq(work.data(), m));
      if (nrm > 0.5) {
        double* dst = u.col(j);
        for (std::size_t i = 0; i < m; ++i) dst[i] = work[i] / nrm;
        ++cand;
        break;
      }
    }
  }
}

}  // namespace

SvdResult svd(const Matrix& x) {
  if (x.rows() == 0 || x.cols() == 0)
    throw Error(ErrorCode::ShapeMismatch, "svd: empty matrix");
  require_finite(x, "svd");
  const auto& ops = kernels::active();

  const bool flip = x.cols() > x.rows();  // factor the transpose so rows >= cols
  Matrix a = flip ? transpose(x) : x;
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();

  Matrix vacc;
  jacobi_orthogonalize(a, vacc);

  std::vector<double> sig(k);
  for (std::size_t j = 0; j < k; ++j) sig[j] = std::sqrt(ops.nrm2_sq(a.col(j), m));

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

  const double sig_max = sig.empty() ? 0.0 : sig[order[0]];
  const double zero_tol = sig_max * kRankZeroRel;

  Matrix u(m, k);
  Matrix vr(k, k);
  std::vector<double> sigma(k);
  std::vector<bool> needs_fill(k, false);
  for (std::size_t jj = 0; jj < k; ++jj) {
    const std::size_t src = order[jj];
    sigma[jj] = sig[src];
    const double* vs = vacc.col(src);
    double* vd = vr.col(jj);
    for (std::size_t i = 0; i < k; ++i) vd[i] = vs[i];
    if (sig[src] > zero_tol && sig[src] > 0.0) {
      const double inv = 1.0 / sig[src];
      const double* as = a.col(src);
      double* ud = u.col(jj);
      for (std::size_t i = 0; i < m; ++i) ud[i] = as[i] * inv;
    } else {
      needs_fill[jj] = true;
    }
  }
  complete_basis(u, needs_fill);

  SvdResult out;
  out.singular_values = std::move(sigma);
  if (flip) {
    out.left_basis = std::move(vr);  // d x r
    out.right_basis = std::move(u);  // n x r
  } else {
    out.left_basis = std::move(u);
    out.right_basis = std::move(vr);
  }

  // sign convention: largest-magnitude entry of each left singular vector nonnegative
  const std::size_t r = out.singular_values.size();
  for (std::size_t j = 0; j < r; ++j) {
    double* uc = out.left_basis.col(j);
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < out.left_basis.rows(); ++i) {
      const double mag = std::fabs(uc[i]);
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (uc[arg] < 0.0) {
      ops.scal(-1.0, uc, out.left_basis.rows());
      ops.scal(-1.0, out.right_basis.col(j), out.right_basis.rows());
    }
  }
  return out;
}

double frobenius_distance_sq(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b))
    throw Error(ErrorCode::ShapeMismatch, "frobenius_distance_sq: shapes differ");
  return kernels::active().dist_sq(a.data(), b.data(), a.size());
}

void gemv(const Matrix& a, const double* x, double* y) {
  const auto& ops = kernels::active();
  std::fill(y, y + a.rows(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) ops.axpy(x[j], a.col(j), y, a.rows());
}

void add_outer_scaled(Matrix& a, const double* u, const double* v, double alpha) {
  const auto& ops = kernels::active();
  for (std::size_t j = 0; j < a.cols(); ++j) ops.axpy(alpha * v[j], u, a.col(j), a.rows());
}

}  // namespace sss
