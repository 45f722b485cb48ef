#include "sss/refine.hpp"

#include <algorithm>
#include <string>

#include "sss/rng.hpp"
#include "sss/subspace.hpp"

namespace sss {

RefineReport refine(const Matrix& data, const Clustering& initial, const RefineConfig& cfg,
                    const std::optional<Clustering>& truth) {
  cfg.validate();
  if (data.cols() != initial.labels.size())
    throw Error(ErrorCode::LengthMismatch, "refine: data has " + std::to_string(data.cols()) +
                                               " points, labels have " +
                                               std::to_string(initial.labels.size()));
  validate_clustering(initial, true, "refine");
  if (truth) {
    if (truth->labels.size() != initial.labels.size())
      throw Error(ErrorCode::LengthMismatch, "refine: truth labels differ in length");
    validate_clustering(*truth, false, "refine (truth)");
  }
  require_finite(data, "refine");

  RefineReport report;
  report.config = cfg;
  report.before = initial;

  Clustering current = initial;
  const auto k = static_cast<std::size_t>(initial.k);
  const std::uint64_t master = cfg.seed;

  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    const std::uint64_t round_seed = derive_seed(master, round);
    const auto sizes = cluster_sizes(current);

    RoundResult rr;
    rr.iterations_used.assign(k, -1);

    // learn one stable projector per modeled cluster (clusters run sequentially,
    // sampling iterations inside each are what parallelize)
    std::vector<int> score_col(k, -1);
    StableSubspaceSet modeled;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] < cfg.min_cluster_size) {
        rr.warnings.push_back("cluster " + std::to_string(c) + " has " +
                              std::to_string(sizes[c]) + " points (min_cluster_size " +
                              std::to_string(cfg.min_cluster_size) + "); skipped this round");
        continue;
      }
      const auto idx = indices_of_cluster(current, static_cast<int>(c));
      const Matrix cluster_points = gather_columns(data, idx);
      auto stable = stable_residual_projection(cluster_points, cfg, derive_seed(round_seed, c));
      score_col[c] = static_cast<int>(modeled.clusters.size());
      rr.iterations_used[c] = static_cast<long long>(stable.iterations_used);
      modeled.clusters.push_back(ClusterSubspace{std::move(stable.projection),
                                                 stable.iterations_used,
                                                 std::move(stable.convergence_deltas)});
    }
    if (modeled.clusters.empty()) {
      const auto smallest = std::min_element(sizes.begin(), sizes.end()) - sizes.begin();
      throw Error(ErrorCode::ClusterTooSmall,
                  "refine: no cluster meets min_cluster_size " +
                      std::to_string(cfg.min_cluster_size) + " (smallest is cluster " +
                      std::to_string(smallest) + " with " + std::to_string(sizes[smallest]) +
                      " points)");
    }

    const ResidualScores scores = residual_scores(data, modeled, cfg.p_norm);
    auto [next, log] = dominant_reassign_eligible(current, scores.scores, score_col, cfg.eta);
    report.total_moves += log.moves.size();
    rr.log = std::move(log);
    report.rounds.push_back(std::move(rr));
    current = std::move(next);
  }

  report.after = std::move(current);
  if (truth) {
    report.eval_before = evaluate(initial, initial, *truth);  // zero moves by construction
    report.eval_after = evaluate(initial, report.after, *truth);
  }
  return report;
}

}  // namespace sss
