#include "sss/synth.hpp"

#include <cmath>
#include <string>

#include "sss/kernels.hpp"
#include "sss/rng.hpp"

namespace sss {

void SingleClusterSpec::validate() const {
  if (n < 1) throw Error(ErrorCode::SpecInvalid, "single-cluster spec: n must be >= 1");
  if (d < 1) throw Error(ErrorCode::SpecInvalid, "single-cluster spec: d must be >= 1");
  if (true_dim < 1 || true_dim >= d)
    throw Error(ErrorCode::SpecInvalid, "single-cluster spec: need 1 <= true_dim < d");
  if (!(alpha >= 0.0 && alpha < 0.5))
    throw Error(ErrorCode::SpecInvalid, "single-cluster spec: alpha must be in [0, 0.5)");
}

void MultiSubspaceSpec::validate() const {
  if (k < 1) throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: k must be >= 1");
  if (points_per_cluster < 1)
    throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: points_per_cluster must be >= 1");
  if (d < 1) throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: d must be >= 1");
  if (true_dims.empty() || (true_dims.size() != 1 && true_dims.size() != k))
    throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: true_dims must have 1 or k entries");
  for (std::size_t td : true_dims)
    if (td < 1 || td >= d)
      throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: need 1 <= true_dim < d");
  if (!(noise_sigma >= 0.0))
    throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: noise_sigma must be >= 0");
  if (!(corruption_fraction >= 0.0 && corruption_fraction < 0.5))
    throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: corruption must be in [0, 0.5)");
  if (corruption_fraction > 0.0 && k < 2)
    throw Error(ErrorCode::SpecInvalid, "multi-subspace spec: corruption needs k >= 2");
}

std::size_t MultiSubspaceSpec::dim_of(std::size_t cluster) const {
  return true_dims.size() == 1 ? true_dims[0] : true_dims[cluster];
}

Matrix random_orthonormal(std::size_t d, std::size_t k, Rng& rng) {
  const auto& ops = kernels::active();
  Matrix q(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) q(i, j) = rng.normal();
  // modified Gram-Schmidt, two passes
  for (std::size_t j = 0; j < k; ++j) {
    double* qj = q.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t l = 0; l < j; ++l) {
        const double proj = ops.dot(q.col(l), qj, d);
        ops.axpy(-proj, q.col(l), qj, d);
      }
    const double nrm = std::sqrt(ops.nrm2_sq(qj, d));
    ops.scal(1.0 / nrm, qj, d);
  }
  return q;
}

SingleClusterData gen_single_cluster(const SingleClusterSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto& ops = kernels::active();

  // ceil((1-alpha)*n) inliers == n - floor(alpha*n); the epsilon absorbs
  // binary rounding of alpha*n (e.g. 0.3 * 10 = 2.999...96)
  const auto n_out = static_cast<std::size_t>(
      std::floor(spec.alpha * static_cast<double>(spec.n) + 1e-9));
  const std::size_t n_in = spec.n - n_out;

  const Matrix basis = random_orthonormal(spec.d, spec.true_dim, rng);

  Matrix x(spec.d, spec.n);
  for (std::size_t j = 0; j < n_in; ++j) {
    double* xj = x.col(j);
    for (std::size_t l = 0; l < spec.true_dim; ++l)
      ops.axpy(rng.normal(), basis.col(l), xj, spec.d);
  }
  // outliers: uniform box scaled so the RMS norm is half the inliers'
  // (E||inlier||^2 = true_dim). At that scale one outlier carries roughly one
  // inlier's share of singular-value mass, so the fraction of mass belonging
  // to the inliers tracks the fraction of correctly assigned points; sampling
  // at the correct fraction then hits the rank-selection sweet spot, the
  // regime the convergence and sweep experiments live in.
  const double scale = 0.5 * std::sqrt(3.0 * static_cast<double>(spec.true_dim) /
                                       static_cast<double>(spec.d));
  for (std::size_t j = n_in; j < spec.n; ++j) {
    double* xj = x.col(j);
    for (std::size_t i = 0; i < spec.d; ++i) xj[i] = scale * rng.uniform(-1.0, 1.0);
  }

  const Matrix rotation = random_orthonormal(spec.d, spec.d, rng);
  SingleClusterData out;
  out.data = matmul(rotation, x);
  out.true_member_mask.assign(spec.n, false);
  for (std::size_t j = 0; j < n_in; ++j) out.true_member_mask[j] = true;
  return out;
}

MultiSubspaceData gen_multi_subspace(const MultiSubspaceSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto& ops = kernels::active();

  const std::size_t m = spec.points_per_cluster;
  const std::size_t n = spec.k * m;
  MultiSubspaceData out;
  out.data = Matrix(spec.d, n);
  out.true_labels.labels.assign(n, 0);
  out.true_labels.k = static_cast<int>(spec.k);

  for (std::size_t c = 0; c < spec.k; ++c) {
    const std::size_t td = spec.dim_of(c);
    const Matrix basis = random_orthonormal(spec.d, td, rng);
    for (std::size_t j = 0; j < m; ++j) {
      double* xj = out.data.col(c * m + j);
      for (std::size_t l = 0; l < td; ++l) ops.axpy(rng.normal(), basis.col(l), xj, spec.d);
      if (spec.noise_sigma > 0.0)
        for (std::size_t i = 0; i < spec.d; ++i) xj[i] += spec.noise_sigma * rng.normal();
      out.true_labels.labels[c * m + j] = static_cast<int>(c);
    }
  }

  out.corrupted_labels = out.true_labels;
  const auto flips = static_cast<std::size_t>(
      std::llround(spec.corruption_fraction * static_cast<double>(m)));
  for (std::size_t c = 0; c < spec.k; ++c) {
    const auto victims = rng.sample_without_replacement(m, flips);
    for (std::size_t v : victims) {
      const auto other = rng.below(spec.k - 1);
      const auto target = other >= c ? other + 1 : other;
      out.corrupted_labels.labels[c * m + v] = static_cast<int>(target);
    }
  }
  return out;
}

}  // namespace sss
