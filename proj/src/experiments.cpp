#include "sss/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "sss/linalg.hpp"
#include "sss/rng.hpp"
#include "sss/subspace.hpp"

namespace sss {

Fig1Result run_fig1(const SingleClusterSpec& spec, const RefineConfig& cfg) {
  const SingleClusterData cluster = gen_single_cluster(spec);
  const ResidualProjection oracle =
      oracle_residual_projection(cluster.data, cluster.true_member_mask, cfg.energy_fraction);
  const ResidualProjection pca =
      direct_pca_residual_projection(cluster.data, cfg.energy_fraction);

  Fig1Result out;
  out.pca_error_vs_oracle = frobenius_distance_sq(pca.matrix, oracle.matrix);
  stable_residual_projection(cluster.data, cfg, derive_seed(cfg.seed, 0),
                             [&](std::size_t, const Matrix& avg) {
                               out.stable_error_vs_oracle.push_back(
                                   frobenius_distance_sq(avg, oracle.matrix));
                             });
  return out;
}

Fig2Result run_fig2(const SingleClusterSpec& spec, const RefineConfig& cfg,
                    const std::vector<double>& fraction_grid, bool tie_energy_to_fraction) {
  if (fraction_grid.empty())
    throw Error(ErrorCode::SpecInvalid, "fig2: empty sampling-fraction grid");
  for (double f : fraction_grid)
    if (!(f > 0.0 && f <= 1.0))
      throw Error(ErrorCode::SpecInvalid, "fig2: sampling fractions must be in (0, 1]");

  const SingleClusterData cluster = gen_single_cluster(spec);
  const ResidualProjection oracle =
      oracle_residual_projection(cluster.data, cluster.true_member_mask, cfg.energy_fraction);

  Fig2Result out;
  out.fractions = fraction_grid;
  out.steady_state_errors.reserve(fraction_grid.size());
  for (std::size_t g = 0; g < fraction_grid.size(); ++g) {
    RefineConfig run_cfg = cfg;
    run_cfg.sample_fraction = fraction_grid[g];
    if (tie_energy_to_fraction) run_cfg.energy_fraction = fraction_grid[g];
    std::vector<double> errors;
    stable_residual_projection(cluster.data, run_cfg, derive_seed(cfg.seed, g),
                               [&](std::size_t, const Matrix& avg) {
                                 errors.push_back(frobenius_distance_sq(avg, oracle.matrix));
                               });
    // steady state: mean over the last 20% of iterations actually run
    const std::size_t tail = std::max<std::size_t>(1, errors.size() / 5);
    double acc = 0.0;
    for (std::size_t i = errors.size() - tail; i < errors.size(); ++i) acc += errors[i];
    out.steady_state_errors.push_back(acc / static_cast<double>(tail));
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, step = 0.0, stop = 0.0;
  char extra = '\0';
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &extra);
  if (got != 3 || !(step > 0.0) || stop < start)
    throw Error(ErrorCode::SpecInvalid, "grid must be start:step:stop with step > 0, got '" + text + "'");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-12) break;
    grid.push_back(v);
  }
  return grid;
}

}  // namespace sss
