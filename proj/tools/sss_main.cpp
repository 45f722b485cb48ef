// sss: refine subspace clusterings by stable residual projections and
// dominant nearest-subspace reassignment.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sss/experiments.hpp"
#include "sss/io.hpp"
#include "sss/metrics.hpp"
#include "sss/refine.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(sss::ErrorCode code) {
  switch (code) {
    case sss::ErrorCode::SpecInvalid:
      return kExitUsage;
    case sss::ErrorCode::NonFinite:
    case sss::ErrorCode::ConvergenceFailure:
    case sss::ErrorCode::AllZero:
      return kExitNumeric;
    default:
      return kExitData;
  }
}

ordered_json config_json(const sss::RefineConfig& cfg) {
  ordered_json j;
  j["energy_fraction"] = cfg.energy_fraction;
  j["sample_fraction"] = cfg.sample_fraction;
  j["eta"] = cfg.eta;
  j["p_norm"] = cfg.p_norm;
  j["max_iter"] = cfg.max_iter;
  j["convergence_tol"] = cfg.convergence_tol;
  j["min_cluster_size"] = cfg.min_cluster_size;
  j["seed"] = cfg.seed;
  j["rounds"] = cfg.rounds;
  return j;
}

ordered_json eval_json(const sss::EvalReport& e) {
  ordered_json j;
  j["clustering_error"] = e.clustering_error;
  j["nmi"] = e.nmi;
  j["correct_reassignments"] = e.correct_reassignments;
  j["false_reassignments"] = e.false_reassignments;
  return j;
}

ordered_json report_json(const sss::RefineReport& r) {
  ordered_json j;
  j["config"] = config_json(r.config);
  j["points"] = r.before.labels.size();
  j["clusters"] = r.before.k;
  j["total_moves"] = r.total_moves;
  ordered_json rounds = ordered_json::array();
  for (const auto& rr : r.rounds) {
    ordered_json jr;
    ordered_json moves = ordered_json::array();
    for (const auto& m : rr.log.moves) {
      ordered_json jm;
      jm["point"] = m.point;
      jm["from"] = m.from;
      jm["to"] = m.to;
      jm["own_score"] = m.own_score;
      jm["best_other_score"] = m.best_other_score;
      moves.push_back(std::move(jm));
    }
    jr["moves"] = std::move(moves);
    jr["untouched"] = rr.log.untouched_count;
    jr["iterations_used"] = rr.iterations_used;
    jr["warnings"] = rr.warnings;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["labels_before"] = r.before.labels;
  j["labels_after"] = r.after.labels;
  if (r.eval_before) j["eval_before"] = eval_json(*r.eval_before);
  if (r.eval_after) j["eval_after"] = eval_json(*r.eval_after);
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sss::Error(sss::ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw sss::Error(sss::ErrorCode::Io, "write failed for '" + path.string() + "'");
}

sss::Clustering load_labels_warned(const std::string& path) {
  auto loaded = sss::load_labels(path);
  if (loaded.remap) {
    std::cerr << "warning: labels in '" << path
              << "' were not contiguous 0-based ids; remapped " << loaded.remap->original_ids.size()
              << " distinct ids to 0.." << loaded.remap->original_ids.size() - 1 << "\n";
  }
  return std::move(loaded.clustering);
}

struct FigFlags {
  sss::SingleClusterSpec spec;
  double rho_energy = -1.0;  // <0: use 1 - alpha
  double rho_sample = -1.0;
  std::size_t max_iter = 100;
  double tol = 1e-6;
  std::string out;
};

void add_fig_flags(CLI::App* cmd, FigFlags& f) {
  cmd->add_option("--n", f.spec.n, "points in the cluster")->capture_default_str();
  cmd->add_option("--d", f.spec.d, "ambient dimension")->capture_default_str();
  cmd->add_option("--dim", f.spec.true_dim, "true subspace dimension")->capture_default_str();
  cmd->add_option("--alpha", f.spec.alpha, "outlier fraction in [0, 0.5)")->capture_default_str();
  cmd->add_option("--seed", f.spec.seed, "rng seed")->capture_default_str();
  cmd->add_option("--rho-energy", f.rho_energy, "energy fraction (default: 1 - alpha)");
  cmd->add_option("--rho-sample", f.rho_sample, "sampling fraction (default: 1 - alpha)");
  cmd->add_option("--max-iter", f.max_iter, "sampling iterations")->capture_default_str();
  cmd->add_option("--tol", f.tol, "early-stop tolerance")->capture_default_str();
  cmd->add_option("--out", f.out, "output CSV path")->required();
}

sss::RefineConfig fig_config(const FigFlags& f) {
  sss::RefineConfig cfg;
  cfg.energy_fraction = f.rho_energy > 0.0 ? f.rho_energy : 1.0 - f.spec.alpha;
  cfg.sample_fraction = f.rho_sample > 0.0 ? f.rho_sample : 1.0 - f.spec.alpha;
  cfg.max_iter = f.max_iter;
  cfg.convergence_tol = f.tol;
  cfg.seed = f.spec.seed;
  cfg.min_cluster_size = 1;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable subspace refinement of clustering results"};
  app.require_subcommand(1);

  // refine
  std::string data_path, labels_path, truth_path, out_dir;
  sss::RefineConfig cfg;
  auto* cmd_refine = app.add_subcommand("refine", "refine a preliminary clustering");
  cmd_refine->add_option("--data", data_path, "CSV with one point per row")->required();
  cmd_refine->add_option("--labels", labels_path, "preliminary labels, one per line")->required();
  cmd_refine->add_option("--truth", truth_path, "ground-truth labels (enables evaluation)");
  cmd_refine->add_option("--out", out_dir, "output directory")->required();
  cmd_refine->add_option("--rho-energy", cfg.energy_fraction, "energy fraction")->capture_default_str();
  cmd_refine->add_option("--rho-sample", cfg.sample_fraction, "sampling fraction")->capture_default_str();
  cmd_refine->add_option("--eta", cfg.eta, "reassignment gate")->capture_default_str();
  cmd_refine->add_option("--p", cfg.p_norm, "residual score norm")->capture_default_str();
  cmd_refine->add_option("--max-iter", cfg.max_iter, "sampling iterations per cluster")->capture_default_str();
  cmd_refine->add_option("--tol", cfg.convergence_tol, "early-stop tolerance")->capture_default_str();
  cmd_refine->add_option("--min-cluster-size", cfg.min_cluster_size, "clusters below this are skipped")->capture_default_str();
  cmd_refine->add_option("--seed", cfg.seed, "rng seed")->capture_default_str();
  cmd_refine->add_option("--rounds", cfg.rounds, "pipeline repetitions")->capture_default_str();

  // synth
  auto* cmd_synth = app.add_subcommand("synth", "generate synthetic datasets");
  cmd_synth->require_subcommand(1);

  sss::SingleClusterSpec single_spec;
  std::string synth_out;
  auto* cmd_single = cmd_synth->add_subcommand("single", "one cluster with outliers");
  cmd_single->add_option("--n", single_spec.n, "points")->capture_default_str();
  cmd_single->add_option("--d", single_spec.d, "ambient dimension")->capture_default_str();
  cmd_single->add_option("--dim", single_spec.true_dim, "true subspace dimension")->capture_default_str();
  cmd_single->add_option("--alpha", single_spec.alpha, "outlier fraction")->capture_default_str();
  cmd_single->add_option("--seed", single_spec.seed, "rng seed")->capture_default_str();
  cmd_single->add_option("--out", synth_out, "output directory")->required();

  sss::MultiSubspaceSpec multi_spec;
  auto* cmd_multi = cmd_synth->add_subcommand("multi", "several subspaces with corrupted labels");
  cmd_multi->add_option("--k", multi_spec.k, "clusters")->capture_default_str();
  cmd_multi->add_option("--per-cluster", multi_spec.points_per_cluster, "points per cluster")->capture_default_str();
  cmd_multi->add_option("--d", multi_spec.d, "ambient dimension")->capture_default_str();
  std::vector<std::size_t> multi_dims;
  cmd_multi->add_option("--dim", multi_dims, "subspace dimension (one value, or one per cluster)");
  cmd_multi->add_option("--noise", multi_spec.noise_sigma, "additive noise sigma")->capture_default_str();
  cmd_multi->add_option("--corruption", multi_spec.corruption_fraction, "fraction of labels flipped per cluster")->capture_default_str();
  cmd_multi->add_option("--seed", multi_spec.seed, "rng seed")->capture_default_str();
  cmd_multi->add_option("--out", synth_out, "output directory")->required();

  // fig1 / fig2
  FigFlags fig1_flags;
  auto* cmd_fig1 = app.add_subcommand("fig1", "projector convergence experiment (CSV)");
  add_fig_flags(cmd_fig1, fig1_flags);

  FigFlags fig2_flags;
  std::string grid_text = "0.5:0.05:1.0";
  auto* cmd_fig2 = app.add_subcommand("fig2", "sampling-fraction sweep (CSV)");
  add_fig_flags(cmd_fig2, fig2_flags);
  cmd_fig2->add_option("--grid", grid_text, "sampling fractions start:step:stop")->capture_default_str();

  // eval
  std::string pred_path, eval_truth_path, before_path;
  auto* cmd_eval = app.add_subcommand("eval", "score a clustering against ground truth");
  cmd_eval->add_option("--pred", pred_path, "predicted labels")->required();
  cmd_eval->add_option("--truth", eval_truth_path, "ground-truth labels")->required();
  cmd_eval->add_option("--before", before_path, "labels before refinement (enables move counts)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*cmd_refine) {
      const sss::Matrix data = sss::load_data_csv(data_path);
      const sss::Clustering labels = load_labels_warned(labels_path);
      std::optional<sss::Clustering> truth;
      if (!truth_path.empty()) truth = load_labels_warned(truth_path);

      const sss::RefineReport report = sss::refine(data, labels, cfg, truth);

      fs::create_directories(out_dir);
      sss::save_labels((fs::path(out_dir) / "labels_refined.txt").string(), report.after);
      write_text(fs::path(out_dir) / "report.json", report_json(report).dump(2) + "\n");

      std::cout << "moved " << report.total_moves << " of " << report.before.labels.size()
                << " points over " << report.rounds.size() << " round(s)\n";
      if (report.eval_before && report.eval_after) {
        std::cout << "clustering error " << sss::format_double(report.eval_before->clustering_error)
                  << " -> " << sss::format_double(report.eval_after->clustering_error) << "\n"
                  << "nmi " << sss::format_double(report.eval_before->nmi) << " -> "
                  << sss::format_double(report.eval_after->nmi) << "\n";
      }
      return 0;
    }

    if (*cmd_single) {
      const sss::SingleClusterData out = sss::gen_single_cluster(single_spec);
      fs::create_directories(synth_out);
      sss::save_data_csv((fs::path(synth_out) / "data.csv").string(), out.data);
      std::string mask;
      for (bool b : out.true_member_mask) mask += b ? "1\n" : "0\n";
      write_text(fs::path(synth_out) / "mask.txt", mask);
      std::cout << "wrote " << out.data.cols() << " points of dimension " << out.data.rows()
                << " to " << synth_out << "\n";
      return 0;
    }

    if (*cmd_multi) {
      if (!multi_dims.empty()) multi_spec.true_dims = multi_dims;
      const sss::MultiSubspaceData out = sss::gen_multi_subspace(multi_spec);
      fs::create_directories(synth_out);
      sss::save_data_csv((fs::path(synth_out) / "data.csv").string(), out.data);
      sss::save_labels((fs::path(synth_out) / "labels_true.txt").string(), out.true_labels);
      sss::save_labels((fs::path(synth_out) / "labels_corrupted.txt").string(),
                       out.corrupted_labels);
      std::cout << "wrote " << out.data.cols() << " points of dimension " << out.data.rows()
                << " to " << synth_out << "\n";
      return 0;
    }

    if (*cmd_fig1) {
      const sss::Fig1Result r = sss::run_fig1(fig1_flags.spec, fig_config(fig1_flags));
      std::string csv = "iter,stable_error_vs_oracle,pca_error_vs_oracle\n";
      for (std::size_t i = 0; i < r.stable_error_vs_oracle.size(); ++i)
        csv += std::to_string(i + 1) + "," + sss::format_double(r.stable_error_vs_oracle[i]) +
               "," + sss::format_double(r.pca_error_vs_oracle) + "\n";
      write_text(fig1_flags.out, csv);
      std::cout << "wrote " << r.stable_error_vs_oracle.size() << " iterations to "
                << fig1_flags.out << "\n";
      return 0;
    }

    if (*cmd_fig2) {
      const auto grid = sss::parse_grid(grid_text);
      // the swept rho drives subset size and energy together unless the
      // energy fraction is pinned explicitly
      const bool tie = fig2_flags.rho_energy <= 0.0;
      const sss::Fig2Result r = sss::run_fig2(fig2_flags.spec, fig_config(fig2_flags), grid, tie);
      std::string csv = "sample_fraction,steady_state_error\n";
      for (std::size_t i = 0; i < r.fractions.size(); ++i)
        csv += sss::format_double(r.fractions[i]) + "," +
               sss::format_double(r.steady_state_errors[i]) + "\n";
      write_text(fig2_flags.out, csv);
      std::cout << "wrote " << r.fractions.size() << " grid points to " << fig2_flags.out << "\n";
      return 0;
    }

    if (*cmd_eval) {
      const sss::Clustering pred = load_labels_warned(pred_path);
      const sss::Clustering truth = load_labels_warned(eval_truth_path);
      ordered_json j;
      j["clustering_error"] = sss::clustering_error(pred, truth);
      j["nmi"] = sss::nmi(pred, truth);
      if (!before_path.empty()) {
        const sss::Clustering before = load_labels_warned(before_path);
        const auto [correct, wrong] = sss::reassignment_counts(before, pred, truth);
        j["correct_reassignments"] = correct;
        j["false_reassignments"] = wrong;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const sss::Error& e) {
    std::cerr << "error (" << sss::error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
