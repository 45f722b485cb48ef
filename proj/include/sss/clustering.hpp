#pragma once

#include <cstddef>
#include <vector>

#include "sss/errors.hpp"

namespace sss {

/// A hard partition of n points into clusters 0..k-1. Inputs to the pipeline
/// must use every id at least once; outputs of reassignment may leave ids
/// empty (points can drain out of a cluster).
struct Clustering {
  std::vector<int> labels;
  int k = 0;

  std::size_t size() const { return labels.size(); }
};

/// Throws SpecInvalid unless labels are in range. When `require_nonempty`,
/// additionally every id in 0..k-1 must appear (the input invariant).
void validate_clustering(const Clustering& c, bool require_nonempty, const char* who);

std::vector<std::size_t> cluster_sizes(const Clustering& c);

std::vector<std::size_t> indices_of_cluster(const Clustering& c, int cluster);

}  // namespace sss
