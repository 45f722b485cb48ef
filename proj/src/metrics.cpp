#include "sss/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sss/linalg.hpp"

namespace sss {
namespace {

void require_same_length(const Clustering& a, const Clustering& b, const char* who) {
  if (a.labels.size() != b.labels.size())
    throw Error(ErrorCode::LengthMismatch, std::string(who) + ": label vectors differ in length");
}

/// Declared k, widened to cover stray labels so the tables never index out of range.
std::size_t effective_k(const Clustering& c) {
  int mx = c.k - 1;
  for (int l : c.labels) {
    if (l < 0) throw Error(ErrorCode::SpecInvalid, "metrics: negative label");
    mx = std::max(mx, l);
  }
  return static_cast<std::size_t>(mx + 1);
}

std::vector<std::vector<std::size_t>> contingency(const Clustering& a, const Clustering& b,
                                                  std::size_t rows, std::size_t cols) {
  std::vector<std::vector<std::size_t>> table(rows, std::vector<std::size_t>(cols, 0));
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    ++table[static_cast<std::size_t>(a.labels[i])][static_cast<std::size_t>(b.labels[i])];
  return table;
}

/// Minimum-cost assignment on a square matrix (Jonker-Volgenant style
/// potentials, O(n^3)). Returns row -> column.
std::vector<std::size_t> hungarian_min(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

std::vector<int> best_mapping(const Clustering& pred, const Clustering& truth,
                              std::size_t pred_ids) {
  const std::size_t truth_ids = effective_k(truth);
  const std::size_t nn = std::max(pred_ids, truth_ids);
  const auto table = contingency(pred, truth, nn, nn);
  std::vector<std::vector<double>> cost(nn, std::vector<double>(nn, 0.0));
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) cost[i][j] = -static_cast<double>(table[i][j]);
  const auto assign = hungarian_min(cost);
  std::vector<int> mapping(pred_ids);
  for (std::size_t i = 0; i < pred_ids; ++i) mapping[i] = static_cast<int>(assign[i]);
  return mapping;
}

}  // namespace

std::vector<int> optimal_truth_mapping(const Clustering& pred, const Clustering& truth) {
  require_same_length(pred, truth, "optimal_truth_mapping");
  return best_mapping(pred, truth, effective_k(pred));
}

double clustering_error(const Clustering& pred, const Clustering& truth) {
  require_same_length(pred, truth, "clustering_error");
  if (pred.labels.empty()) return 0.0;
  const std::vector<int> mapping = optimal_truth_mapping(pred, truth);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < pred.labels.size(); ++i)
    if (mapping[static_cast<std::size_t>(pred.labels[i])] == truth.labels[i]) ++matched;
  return 1.0 - static_cast<double>(matched) / static_cast<double>(pred.labels.size());
}

double nmi(const Clustering& pred, const Clustering& truth) {
  require_same_length(pred, truth, "nmi");
  const auto n = static_cast<double>(pred.labels.size());
  if (pred.labels.empty()) throw Error(ErrorCode::LengthMismatch, "nmi: empty labels");
  const std::size_t kp = effective_k(pred);
  const std::size_t kt = effective_k(truth);
  const auto table = contingency(pred, truth, kp, kt);
  std::vector<double> row(kp, 0.0), col(kt, 0.0);
  for (std::size_t i = 0; i < kp; ++i)
    for (std::size_t j = 0; j < kt; ++j) {
      row[i] += static_cast<double>(table[i][j]);
      col[j] += static_cast<double>(table[i][j]);
    }
  double h_pred = 0.0, h_truth = 0.0, mi = 0.0;
  for (std::size_t i = 0; i < kp; ++i)
    if (row[i] > 0.0) h_pred -= row[i] / n * std::log(row[i] / n);
  for (std::size_t j = 0; j < kt; ++j)
    if (col[j] > 0.0) h_truth -= col[j] / n * std::log(col[j] / n);
  for (std::size_t i = 0; i < kp; ++i)
    for (std::size_t j = 0; j < kt; ++j)
      if (table[i][j] > 0) {
        const auto nij = static_cast<double>(table[i][j]);
        mi += nij / n * std::log(nij * n / (row[i] * col[j]));
      }
  if (h_pred == 0.0 && h_truth == 0.0) return 1.0;  // both single-cluster
  if (h_pred == 0.0 || h_truth == 0.0) return 0.0;
  const double value = mi / std::sqrt(h_pred * h_truth);
  return value < 0.0 ? 0.0 : value;  // clamp -1e-17 style noise
}

std::pair<std::size_t, std::size_t> reassignment_counts(const Clustering& before,
                                                        const Clustering& after,
                                                        const Clustering& truth) {
  require_same_length(before, after, "reassignment_counts");
  require_same_length(after, truth, "reassignment_counts");
  // the mapping comes from the AFTER clustering; pad the id space so ids that
  // only appear in `before` still map somewhere deterministic
  const std::size_t pred_ids = std::max(effective_k(before), effective_k(after));
  const auto mapping = best_mapping(after, truth, pred_ids);
  std::size_t correct = 0, wrong = 0;
  for (std::size_t i = 0; i < before.labels.size(); ++i) {
    if (before.labels[i] == after.labels[i]) continue;
    const bool matched_before = mapping[static_cast<std::size_t>(before.labels[i])] == truth.labels[i];
    const bool matched_after = mapping[static_cast<std::size_t>(after.labels[i])] == truth.labels[i];
    if (!matched_before && matched_after)
      ++correct;
    else
      ++wrong;  // includes wrong-to-wrong moves
  }
  return {correct, wrong};
}

std::vector<double> projection_error_curve(const std::vector<Matrix>& trace,
                                           const ResidualProjection& reference) {
  std::vector<double> out;
  out.reserve(trace.size());
  for (const auto& m : trace) out.push_back(frobenius_distance_sq(m, reference.matrix));
  return out;
}

EvalReport evaluate(const Clustering& before, const Clustering& after, const Clustering& truth) {
  EvalReport r;
  r.clustering_error = clustering_error(after, truth);
  r.nmi = nmi(after, truth);
  const auto [c, f] = reassignment_counts(before, after, truth);
  r.correct_reassignments = c;
  r.false_reassignments = f;
  return r;
}

}  // namespace sss
