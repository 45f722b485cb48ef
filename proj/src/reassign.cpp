#include "sss/reassign.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sss/kernels.hpp"
#include "sss/linalg.hpp"
#include "sss/parallel.hpp"

namespace sss {

ResidualScores residual_scores(const Matrix& data, const StableSubspaceSet& subspaces, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::SpecInvalid, "residual_scores: p must be >= 1");
  const std::size_t d = data.rows();
  const std::size_t n = data.cols();
  const std::size_t k = subspaces.cluster_count();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "residual_scores: no subspaces");
  for (std::size_t c = 0; c < k; ++c)
    if (subspaces.clusters[c].projection.dim() != d)
      throw Error(ErrorCode::DimensionMismatch,
                  "residual_scores: projector for cluster " + std::to_string(c) + " has dim " +
                      std::to_string(subspaces.clusters[c].projection.dim()) + ", data has " +
                      std::to_string(d));

  ResidualScores out;
  out.p = p;
  out.scores = Matrix(n, k);
  const double inv_p = 1.0 / p;
  const auto& ops = kernels::active();
  parallel_for_chunks(n, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> residual(d);
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        gemv(subspaces.clusters[c].projection.matrix, data.col(i), residual.data());
        const double acc = ops.sum_abs_pow(residual.data(), d, p);
        out.scores(i, c) = acc == 0.0 ? 0.0 : std::pow(acc, inv_p);
      }
    }
  });
  return out;
}

namespace {

std::pair<Clustering, ReassignmentLog> gated_reassign(const Clustering& initial,
                                                      const Matrix& scores,
                                                      const std::vector<int>& score_col,
                                                      double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw Error(ErrorCode::SpecInvalid, "dominant_reassign: eta must be in (0, 1]");
  if (scores.rows() != initial.labels.size())
    throw Error(ErrorCode::LengthMismatch, "dominant_reassign: scores rows != point count");
  validate_clustering(initial, false, "dominant_reassign");

  Clustering after = initial;
  ReassignmentLog log;
  const std::size_t n = initial.labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int own = initial.labels[i];
    const int own_col = score_col[static_cast<std::size_t>(own)];
    if (own_col < 0) continue;  // unmodeled cluster: point stays
    const double own_score = scores(i, static_cast<std::size_t>(own_col));
    int best_cluster = -1;
    double best_score = 0.0;
    for (int c = 0; c < initial.k; ++c) {
      if (c == own) continue;
      const int col = score_col[static_cast<std::size_t>(c)];
      if (col < 0) continue;
      const double e = scores(i, static_cast<std::size_t>(col));
      if (best_cluster < 0 || e < best_score) {  // strict <: lowest id wins ties
        best_cluster = c;
        best_score = e;
      }
    }
    if (best_cluster < 0) continue;
    // own == 0 requires strict improvement, which a nonnegative score never gives
    if (own_score > 0.0 && best_score <= eta * own_score) {
      after.labels[i] = best_cluster;
      log.moves.push_back(Move{i, own, best_cluster, own_score, best_score});
    }
  }
  log.untouched_count = n - log.moves.size();
  return {std::move(after), std::move(log)};
}

}  // namespace

std::pair<Clustering, ReassignmentLog> dominant_reassign(const Clustering& initial,
                                                         const ResidualScores& scores,
                                                         double eta) {
  if (scores.clusters() != static_cast<std::size_t>(initial.k))
    throw Error(ErrorCode::LengthMismatch,
                "dominant_reassign: scores have " + std::to_string(scores.clusters()) +
                    " clusters, clustering has " + std::to_string(initial.k));
  std::vector<int> ident(static_cast<std::size_t>(initial.k));
  for (int c = 0; c < initial.k; ++c) ident[static_cast<std::size_t>(c)] = c;
  return gated_reassign(initial, scores.scores, ident, eta);
}

std::pair<Clustering, ReassignmentLog> dominant_reassign_eligible(const Clustering& initial,
                                                                  const Matrix& scores,
                                                                  const std::vector<int>& score_col,
                                                                  double eta) {
  if (score_col.size() != static_cast<std::size_t>(initial.k))
    throw Error(ErrorCode::LengthMismatch, "dominant_reassign: score_col size != cluster count");
  return gated_reassign(initial, scores, score_col, eta);
}

}  // namespace sss
