#pragma once

#include <cstddef>
#include <cstdint>

namespace sss {

/// Every knob of the refinement pipeline. Defaults follow the method's
/// recommended settings: 0.9 energy / 0.9 sampling, eta 0.5, p 1.5.
/// energy_fraction and sample_fraction are deliberately separate fields even
/// though they nominally coincide; experiments sweep one while holding the
/// other (see the fig2 runner).
struct RefineConfig {
  double energy_fraction = 0.9;   // cumulative singular-value mass for rank selection, (0,1]
  double sample_fraction = 0.9;   // subset size as a fraction of the cluster, (0,1]
  double eta = 0.5;               // reassignment gate, (0,1]
  double p_norm = 1.5;            // residual score norm, >= 1
  std::size_t max_iter = 100;     // sampling iterations per cluster
  double convergence_tol = 1e-6;  // early stop on ||avg_i - avg_{i-1}||_F
  std::size_t min_cluster_size = 3;
  std::uint64_t seed = 0;
  std::size_t rounds = 1;         // full pipeline repetitions

  /// Throws SpecInvalid on out-of-range values.
  void validate() const;
};

}  // namespace sss
