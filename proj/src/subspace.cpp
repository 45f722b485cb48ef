#include "sss/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sss/kernels.hpp"
#include "sss/parallel.hpp"
#include "sss/rng.hpp"

namespace sss {
namespace {

// Early stopping is only consulted from this iteration on.
constexpr std::size_t kMinIterationsBeforeStop = 10;

// Iterations are computed in fixed-size blocks so an early stop does not
// require materializing all max_iter projectors first.
constexpr std::size_t kIterationBlock = 16;

Matrix residual_projector_from_svd(const SvdResult& s, std::size_t rank_p) {
  const std::size_t d = s.left_basis.rows();
  Matrix proj = Matrix::identity(d);
  for (std::size_t l = 0; l < rank_p; ++l) {
    const double* u = s.left_basis.col(l);
    add_outer_scaled(proj, u, u, -1.0);
  }
  return proj;
}

std::size_t subset_size(double sample_fraction, std::size_t n) {
  const auto s = static_cast<std::size_t>(std::llround(sample_fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(s, 1, n);
}

}  // namespace

std::size_t select_rank(const std::vector<double>& singular_values, double rho) {
  if (!(rho > 0.0 && rho <= 1.0))
    throw Error(ErrorCode::SpecInvalid, "select_rank: rho must be in (0, 1]");
  if (singular_values.empty())
    throw Error(ErrorCode::AllZero, "select_rank: no singular values");
  double total = 0.0;
  for (double s : singular_values) total += s;
  if (total <= 0.0)
    throw Error(ErrorCode::AllZero, "select_rank: all singular values are zero");
  // cum >= rho * total instead of cum/total >= rho: no division noise, and the
  // final prefix equals total exactly (same accumulation order), so rho = 1
  // always lands on the last nonzero index.
  const double threshold = rho * total;
  double cum = 0.0;
  for (std::size_t p = 0; p < singular_values.size(); ++p) {
    cum += singular_values[p];
    if (cum >= threshold) return p + 1;
  }
  return singular_values.size();
}

ResidualProjection residual_projection(const Matrix& points, double rho) {
  if (points.cols() == 0)
    throw Error(ErrorCode::EmptySelection, "residual_projection: no points");
  const SvdResult s = svd(points);
  const std::size_t p = select_rank(s.singular_values, rho);
  return ResidualProjection{residual_projector_from_svd(s, p)};
}

ResidualProjection oracle_residual_projection(const Matrix& points,
                                              const std::vector<bool>& true_member_mask,
                                              double rho) {
  if (true_member_mask.size() != points.cols())
    throw Error(ErrorCode::ShapeMismatch, "oracle_residual_projection: mask length != point count");
  std::size_t cnt = 0;
  for (bool b : true_member_mask) cnt += b ? 1 : 0;
  if (cnt == 0)
    throw Error(ErrorCode::EmptySelection, "oracle_residual_projection: mask selects no points");
  return residual_projection(select_columns(points, true_member_mask), rho);
}

ResidualProjection direct_pca_residual_projection(const Matrix& points, double rho) {
  return residual_projection(points, rho);
}

StableProjectionResult stable_residual_projection(const Matrix& points, const RefineConfig& cfg,
                                                  std::uint64_t cluster_seed,
                                                  const AverageObserver& observer) {
  cfg.validate();
  const std::size_t n = points.cols();
  const std::size_t d = points.rows();
  if (n < cfg.min_cluster_size)
    throw Error(ErrorCode::ClusterTooSmall,
                "stable_residual_projection: cluster has " + std::to_string(n) +
                    " points, need at least " + std::to_string(cfg.min_cluster_size));
  require_finite(points, "stable_residual_projection");

  const std::size_t s = subset_size(cfg.sample_fraction, n);
  const auto& ops = kernels::active();

  StableProjectionResult result;

  // Sampling the whole cluster is deterministic: every subset is the cluster
  // itself and the average of identical projectors is that projector, exactly.
  if (s == n) {
    const Matrix proj = residual_projection(points, cfg.energy_fraction).matrix;
    std::size_t iter = 0;
    bool stopped = false;
    while (iter < cfg.max_iter && !stopped) {
      ++iter;
      if (iter >= 2) {
        result.convergence_deltas.push_back(0.0);
        if (iter >= kMinIterationsBeforeStop && 0.0 < cfg.convergence_tol) stopped = true;
      }
      if (observer) observer(iter, proj);
    }
    result.iterations_used = iter;
    result.projection.matrix = proj;
    return result;
  }
  Matrix running_sum(d, d);
  Matrix avg_prev;
  std::vector<Matrix> block(kIterationBlock);

  std::size_t iter = 0;  // 1-based once inside the loop
  bool stopped = false;
  while (iter < cfg.max_iter && !stopped) {
    const std::size_t block_begin = iter;  // 0-based iteration indices
    const std::size_t block_count = std::min(kIterationBlock, cfg.max_iter - block_begin);
    parallel_for_chunks(block_count, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t b = lo; b < hi; ++b) {
        Rng rng(derive_seed(cluster_seed, block_begin + b));
        const auto idx = rng.sample_without_replacement(n, s);
        const Matrix subset = gather_columns(points, idx);
        const SvdResult sv = svd(subset);
        const std::size_t p = select_rank(sv.singular_values, cfg.energy_fraction);
        block[b] = residual_projector_from_svd(sv, p);
      }
    });
    // ordered reduction: identical result for any thread budget
    for (std::size_t b = 0; b < block_count && !stopped; ++b) {
      iter = block_begin + b + 1;
      ops.axpy(1.0, block[b].data(), running_sum.data(), running_sum.size());
      Matrix avg = running_sum;
      ops.scal(1.0 / static_cast<double>(iter), avg.data(), avg.size());
      if (iter >= 2) {
        const double delta =
            std::sqrt(ops.dist_sq(avg.data(), avg_prev.data(), avg.size()));
        result.convergence_deltas.push_back(delta);
        if (iter >= kMinIterationsBeforeStop && delta < cfg.convergence_tol) stopped = true;
      }
      if (observer) observer(iter, avg);
      avg_prev = std::move(avg);
    }
  }

  result.iterations_used = iter;
  result.projection.matrix = std::move(avg_prev);
  return result;
}

}  // namespace sss
