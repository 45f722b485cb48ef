#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sss/config.hpp"
#include "sss/linalg.hpp"
#include "sss/matrix.hpp"

namespace sss {

/// Orthogonal (or averaged) projector onto the residual complement of a
/// cluster's principal subspace. A single-subset instance is idempotent;
/// an averaged instance is symmetric with spectrum in [0, 1].
struct ResidualProjection {
  Matrix matrix;  // dim x dim, symmetric

  std::size_t dim() const { return matrix.rows(); }
};

/// Minimum P with sum_{l<=P} sigma_l >= rho * sum_l sigma_l. 1-based count.
/// Throws SpecInvalid for rho outside (0,1], AllZero when every value is zero.
std::size_t select_rank(const std::vector<double>& singular_values, double rho);

/// I - U_P U_P^T for the top-P left singular directions of `points`,
/// P chosen by select_rank at `rho`.
ResidualProjection residual_projection(const Matrix& points, double rho);

/// residual_projection restricted to the truly-correct members: the best
/// reference reachable with ground-truth knowledge.
ResidualProjection oracle_residual_projection(const Matrix& points,
                                              const std::vector<bool>& true_member_mask,
                                              double rho);

/// Plain PCA baseline: the same construction on the whole cluster, no sampling.
ResidualProjection direct_pca_residual_projection(const Matrix& points, double rho);

/// Called once per iteration, ascending, with the running average so far.
/// avg is the mean of the first `iteration` per-subset projectors (1-based).
using AverageObserver = std::function<void(std::size_t iteration, const Matrix& avg)>;

struct StableProjectionResult {
  ResidualProjection projection;
  std::size_t iterations_used = 0;
  /// convergence_deltas[j] = ||avg_{j+2} - avg_{j+1}||_F (defined from iteration 2 on).
  std::vector<double> convergence_deltas;
};

/// Step-1 core: draw max_iter subsets of round(sample_fraction * N) points
/// without replacement, average their residual projectors, optionally stop
/// early once the running average settles (only from iteration 10 on).
///
/// Iteration i draws from derive_seed(cluster_seed, i); projectors may be
/// computed concurrently but are always reduced in ascending iteration order,
/// so the result is bit-identical for any thread budget.
StableProjectionResult stable_residual_projection(const Matrix& points, const RefineConfig& cfg,
                                                  std::uint64_t cluster_seed,
                                                  const AverageObserver& observer = {});

struct ClusterSubspace {
  ResidualProjection projection;
  std::size_t iterations_used = 0;
  std::vector<double> convergence_deltas;
};

/// One stable residual projector per cluster id, index == cluster id.
struct StableSubspaceSet {
  std::vector<ClusterSubspace> clusters;

  std::size_t cluster_count() const { return clusters.size(); }
  std::size_t dim() const { return clusters.empty() ? 0 : clusters.front().projection.dim(); }
};

}  // namespace sss
