#pragma once

#include <cstddef>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/matrix.hpp"
#include "sss/subspace.hpp"

namespace sss {

struct EvalReport {
  double clustering_error = 0.0;  // [0,1]
  double nmi = 0.0;               // [0,1]
  std::size_t correct_reassignments = 0;
  std::size_t false_reassignments = 0;
};

/// Fraction of points mislabeled under the best one-to-one matching of
/// predicted ids to truth ids (optimal assignment on the contingency table).
/// Throws LengthMismatch.
double clustering_error(const Clustering& pred, const Clustering& truth);

/// Mutual information normalized by the geometric mean of the entropies
/// (natural log). 1 when both partitions are the single cluster; 0 when
/// exactly one entropy vanishes.
double nmi(const Clustering& pred, const Clustering& truth);

/// Among moved points, counts fixes and breaks under the optimal truth-mapping
/// of the AFTER clustering; wrong-to-wrong moves count as false.
/// correct + false == number of moved points.
std::pair<std::size_t, std::size_t> reassignment_counts(const Clustering& before,
                                                        const Clustering& after,
                                                        const Clustering& truth);

/// Per-iteration squared Frobenius distance of each trace element to `reference`.
std::vector<double> projection_error_curve(const std::vector<Matrix>& trace,
                                           const ResidualProjection& reference);

/// Best one-to-one mapping pred id -> truth id (maximizing matched points).
/// Ids missing on either side are padded; every pred id gets some truth id.
std::vector<int> optimal_truth_mapping(const Clustering& pred, const Clustering& truth);

EvalReport evaluate(const Clustering& before, const Clustering& after, const Clustering& truth);

}  // namespace sss
