#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/config.hpp"
#include "sss/matrix.hpp"
#include "sss/metrics.hpp"
#include "sss/reassign.hpp"

namespace sss {

struct RoundResult {
  ReassignmentLog log;
  /// iterations_used[k] for clusters that were modeled this round, -1 for skipped ones.
  std::vector<long long> iterations_used;
  std::vector<std::string> warnings;  // skipped-cluster notices
};

struct RefineReport {
  RefineConfig config;
  Clustering before;
  Clustering after;
  std::vector<RoundResult> rounds;
  std::size_t total_moves = 0;
  std::optional<EvalReport> eval_before;  // engaged when truth was supplied
  std::optional<EvalReport> eval_after;
};

/// The full two-step pipeline: learn one stable residual projector per cluster,
/// score every point against every projector, apply the dominant
/// nearest-subspace rule; repeated cfg.rounds times, re-learning projectors
/// from the updated labels each round.
///
/// Clusters below cfg.min_cluster_size are skipped with a warning: no points
/// move into or out of them. Throws ClusterTooSmall only when no cluster at
/// all is large enough to model.
RefineReport refine(const Matrix& data, const Clustering& initial, const RefineConfig& cfg,
                    const std::optional<Clustering>& truth = std::nullopt);

}  // namespace sss
