#pragma once

#include <cstdint>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/matrix.hpp"

namespace sss {

/// The single-cluster outlier model: (1-alpha)n points in a random true_dim
/// subspace, the rest uniform outliers, everything rotated by a random unitary.
struct SingleClusterSpec {
  std::size_t n = 100;
  std::size_t d = 100;
  std::size_t true_dim = 10;
  double alpha = 0.05;  // outlier fraction, [0, 0.5)
  std::uint64_t seed = 0;

  void validate() const;  // throws SpecInvalid
};

struct SingleClusterData {
  Matrix data;                        // d x n
  std::vector<bool> true_member_mask; // true = drawn inside the subspace
};

/// Inliers take standard-normal coefficients on an orthonormal basis; outliers
/// are uniform on a box scaled to half the inliers' RMS norm. Deterministic
/// under spec.seed.
SingleClusterData gen_single_cluster(const SingleClusterSpec& spec);

/// K independent subspaces with label corruption, the end-to-end test bed.
struct MultiSubspaceSpec {
  std::size_t k = 3;
  std::size_t points_per_cluster = 60;
  std::size_t d = 30;
  std::vector<std::size_t> true_dims = {4};  // size 1 broadcasts to all clusters
  double noise_sigma = 0.01;
  double corruption_fraction = 0.1;  // labels flipped per cluster, [0, 0.5)
  std::uint64_t seed = 0;

  void validate() const;  // throws SpecInvalid
  std::size_t dim_of(std::size_t cluster) const;
};

struct MultiSubspaceData {
  Matrix data;  // d x (k * points_per_cluster)
  Clustering true_labels;
  Clustering corrupted_labels;  // exactly round(corruption * m) flips per cluster
};

MultiSubspaceData gen_multi_subspace(const MultiSubspaceSpec& spec);

/// Orthonormal basis of a random true_dim-dimensional subspace of R^d
/// (modified Gram-Schmidt, twice, on a Gaussian matrix). Exposed for tests.
Matrix random_orthonormal(std::size_t d, std::size_t k, class Rng& rng);

}  // namespace sss
