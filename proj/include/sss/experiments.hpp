#pragma once

#include <cstddef>
#include <vector>

#include "sss/config.hpp"
#include "sss/synth.hpp"

namespace sss {

/// Convergence experiment on the single-cluster outlier model: per-iteration
/// squared Frobenius error of the averaged projector to the Oracle projector,
/// plus the constant error of the direct-PCA projector.
struct Fig1Result {
  std::vector<double> stable_error_vs_oracle;  // index i = iteration i+1
  double pca_error_vs_oracle = 0.0;
};

/// cfg.energy_fraction / cfg.sample_fraction drive the run (the runners
/// default both to 1 - alpha; see the CLI).
Fig1Result run_fig1(const SingleClusterSpec& spec, const RefineConfig& cfg);

/// Sampling-fraction sweep: steady-state error of the averaged projector
/// (mean over the last 20% of iterations used) per grid value.
///
/// The sweep varies one rho the way the method defines it: each grid value
/// drives the subset size AND the rank-selection energy fraction together.
/// Pass tie_energy_to_fraction = false to pin the energy at
/// cfg.energy_fraction and sweep the subset size alone. The Oracle reference
/// always uses cfg.energy_fraction.
struct Fig2Result {
  std::vector<double> fractions;
  std::vector<double> steady_state_errors;
};

Fig2Result run_fig2(const SingleClusterSpec& spec, const RefineConfig& cfg,
                    const std::vector<double>& fraction_grid,
                    bool tie_energy_to_fraction = true);

/// "start:step:stop" inclusive, e.g. "0.5:0.05:1.0". Throws SpecInvalid.
std::vector<double> parse_grid(const std::string& text);

}  // namespace sss
