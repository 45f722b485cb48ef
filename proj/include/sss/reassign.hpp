#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/matrix.hpp"
#include "sss/subspace.hpp"

namespace sss {

/// scores(n, k) = || P_k x_n ||_p, the misfit of point n against cluster k.
struct ResidualScores {
  Matrix scores;  // n rows (points) x K cols (clusters), column-major
  double p = 2.0;

  std::size_t points() const { return scores.rows(); }
  std::size_t clusters() const { return scores.cols(); }
};

struct Move {
  std::size_t point;
  int from;
  int to;
  double own_score;         // e under the original cluster
  double best_other_score;  // min e over the other clusters
};

struct ReassignmentLog {
  std::vector<Move> moves;  // ascending point index
  std::size_t untouched_count = 0;
};

/// Residual score of every point against every cluster's stable projector.
/// Rows are independent and computed in parallel; every entry is a pure
/// function of (data, subspaces), so the budget never changes the values.
/// Throws DimensionMismatch if projector dims differ from the data dim,
/// SpecInvalid for p < 1.
ResidualScores residual_scores(const Matrix& data, const StableSubspaceSet& subspaces, double p);

/// Dominant nearest-subspace rule, one pass against the ORIGINAL labels:
/// a point moves to the best other cluster iff best_other <= eta * own
/// (with own > 0; equal-zero scores never move). Ties in the argmin go to the
/// lowest cluster id. Output may contain emptied clusters.
std::pair<Clustering, ReassignmentLog> dominant_reassign(const Clustering& initial,
                                                         const ResidualScores& scores, double eta);

/// Same rule restricted to an eligible subset of clusters (degraded mode for
/// clusters too small to model): points outside eligible clusters stay put and
/// nothing moves into an ineligible cluster. score_col maps cluster id to its
/// column in `scores`, -1 when ineligible.
std::pair<Clustering, ReassignmentLog> dominant_reassign_eligible(const Clustering& initial,
                                                                  const Matrix& scores,
                                                                  const std::vector<int>& score_col,
                                                                  double eta);

}  // namespace sss
