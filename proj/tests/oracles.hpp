// Test-only reference implementations, kept deliberately independent of the
// library's numerical paths (different algorithms, plain loops, no kernels).
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/matrix.hpp"
#include "sss/rng.hpp"

namespace oracles {

/// Classical two-sided cyclic Jacobi for symmetric matrices. Eigenvalues
/// sorted descending. This is a different algorithm from the library's
/// one-sided SVD and shares none of its code.
inline std::vector<double> sym_eigenvalues(sss::Matrix a) {
  const std::size_t n = a.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a(i, j)));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a(p, q)));
    if (off <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= tol) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const double app = a(p, p), aqq = a(q, q);
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

/// X^T X as a plain double loop (no kernels).
inline sss::Matrix gram(const sss::Matrix& x) {
  sss::Matrix g(x.cols(), x.cols());
  for (std::size_t i = 0; i < x.cols(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < x.rows(); ++r) acc += x(r, i) * x(r, j);
      g(i, j) = acc;
    }
  return g;
}

/// Exhaustive best-permutation clustering error, feasible for <= 7 ids.
inline double exhaustive_clustering_error(const sss::Clustering& pred,
                                          const sss::Clustering& truth) {
  int mx = std::max(pred.k, truth.k) - 1;
  for (int l : pred.labels) mx = std::max(mx, l);
  for (int l : truth.labels) mx = std::max(mx, l);
  const std::size_t nn = static_cast<std::size_t>(mx) + 1;
  std::vector<int> perm(nn);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t matched = 0;
    for (std::size_t i = 0; i < pred.labels.size(); ++i)
      if (perm[static_cast<std::size_t>(pred.labels[i])] == truth.labels[i]) ++matched;
    best = std::max(best, matched);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 1.0 - static_cast<double>(best) / static_cast<double>(pred.labels.size());
}

/// NMI straight from the contingency-table definition.
inline double literal_nmi(const sss::Clustering& pred, const sss::Clustering& truth) {
  const double n = static_cast<double>(pred.labels.size());
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pa, pb;
  for (std::size_t i = 0; i < pred.labels.size(); ++i) {
    joint[{pred.labels[i], truth.labels[i]}] += 1.0;
    pa[pred.labels[i]] += 1.0;
    pb[truth.labels[i]] += 1.0;
  }
  double mi = 0.0;
  for (const auto& [key, nij] : joint)
    mi += nij / n * std::log(nij * n / (pa[key.first] * pb[key.second]));
  double ha = 0.0, hb = 0.0;
  for (const auto& [id, cnt] : pa) ha -= cnt / n * std::log(cnt / n);
  for (const auto& [id, cnt] : pb) hb -= cnt / n * std::log(cnt / n);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return mi / std::sqrt(ha * hb);
}

inline sss::Matrix random_matrix(std::size_t rows, std::size_t cols, sss::Rng& rng,
                                 double lo = -1.0, double hi = 1.0) {
  sss::Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = rng.uniform(lo, hi);
  return m;
}

}  // namespace oracles
