#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sss/metrics.hpp"

using sss::Clustering;

namespace {

Clustering labels_of(std::vector<int> l, int k) { return Clustering{std::move(l), k}; }

Clustering random_labels(std::size_t n, int k, sss::Rng& rng) {
  std::vector<int> l(n);
  for (auto& x : l) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
  return labels_of(std::move(l), k);
}

}  // namespace

TEST_CASE("clustering_error basics") {
  const auto truth = labels_of({0, 0, 1, 1, 2, 2}, 3);
  CHECK(sss::clustering_error(truth, truth) == 0.0);

  const auto permuted = labels_of({2, 2, 0, 0, 1, 1}, 3);
  CHECK(sss::clustering_error(permuted, truth) == 0.0);

  const auto off_by_one = labels_of({0, 0, 1, 1, 2, 0}, 3);
  CHECK(sss::clustering_error(off_by_one, truth) == doctest::Approx(1.0 / 6.0));

  CHECK_THROWS_AS(sss::clustering_error(labels_of({0, 1}, 2), truth), sss::Error);
}

TEST_CASE("clustering_error equals the exhaustive-permutation oracle") {
  sss::Rng rng(101);
  for (int rep = 0; rep < 60; ++rep) {
    const int k = 2 + static_cast<int>(rng.below(4));  // up to 5 clusters
    const auto pred = random_labels(12, k, rng);
    const auto truth = random_labels(12, k, rng);
    CHECK(sss::clustering_error(pred, truth) ==
          doctest::Approx(oracles::exhaustive_clustering_error(pred, truth)).epsilon(1e-15));
  }
}

TEST_CASE("clustering_error with unequal cluster counts") {
  sss::Rng rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    const auto pred = random_labels(14, 4, rng);
    const auto truth = random_labels(14, 2, rng);
    CHECK(sss::clustering_error(pred, truth) ==
          doctest::Approx(oracles::exhaustive_clustering_error(pred, truth)).epsilon(1e-15));
  }
}

TEST_CASE("nmi basics") {
  const auto truth = labels_of({0, 0, 1, 1, 2, 2}, 3);
  CHECK(std::fabs(sss::nmi(truth, truth) - 1.0) <= 1e-12);

  // permutation invariance
  const auto permuted = labels_of({1, 1, 2, 2, 0, 0}, 3);
  CHECK(std::fabs(sss::nmi(permuted, truth) - 1.0) <= 1e-12);

  // balanced cross design has exactly zero mutual information
  const auto a = labels_of({0, 0, 1, 1}, 2);
  const auto b = labels_of({0, 1, 0, 1}, 2);
  CHECK(sss::nmi(a, b) == 0.0);

  // both single-cluster: defined as 1; one degenerate side: 0
  const auto single = labels_of({0, 0, 0, 0}, 1);
  CHECK(sss::nmi(single, single) == 1.0);
  CHECK(sss::nmi(single, a) == 0.0);
  CHECK(sss::nmi(a, single) == 0.0);
}

TEST_CASE("nmi matches the literal contingency formula") {
  sss::Rng rng(107);
  for (int rep = 0; rep < 50; ++rep) {
    const auto pred = random_labels(20, 2 + static_cast<int>(rng.below(3)), rng);
    const auto truth = random_labels(20, 2 + static_cast<int>(rng.below(3)), rng);
    const double got = sss::nmi(pred, truth);
    const double want = oracles::literal_nmi(pred, truth);
    CHECK(std::fabs(got - want) <= 1e-12);
    CHECK(got >= 0.0);
    CHECK(got <= 1.0 + 1e-12);
  }
}

TEST_CASE("reassignment_counts basics") {
  const auto truth = labels_of({0, 0, 0, 1, 1, 1}, 2);
  const auto before = labels_of({0, 0, 1, 1, 1, 0}, 2);

  // no moves
  const auto [c0, f0] = sss::reassignment_counts(before, before, truth);
  CHECK(c0 == 0);
  CHECK(f0 == 0);

  // one planted fix (point 2) and one planted break (point 4)
  const auto after = labels_of({0, 0, 0, 1, 0, 0}, 2);
  const auto [c1, f1] = sss::reassignment_counts(before, after, truth);
  CHECK(c1 == 1);
  CHECK(f1 == 1);
}

TEST_CASE("reassignment_counts reproduces the 2-correct 0-false pattern") {
  // 64 points, 2 classes, 4 initial errors; refinement fixes exactly two
  std::vector<int> truth_l(64), before_l(64), after_l(64);
  for (std::size_t i = 0; i < 64; ++i) truth_l[i] = i < 32 ? 0 : 1;
  before_l = truth_l;
  before_l[3] = 1;
  before_l[17] = 1;
  before_l[40] = 0;
  before_l[55] = 0;
  after_l = before_l;
  after_l[3] = 0;
  after_l[40] = 1;

  const auto truth = labels_of(truth_l, 2);
  const auto before = labels_of(before_l, 2);
  const auto after = labels_of(after_l, 2);

  CHECK(sss::clustering_error(before, truth) == doctest::Approx(4.0 / 64.0));
  CHECK(sss::clustering_error(after, truth) == doctest::Approx(2.0 / 64.0));
  const auto [correct, wrong] = sss::reassignment_counts(before, after, truth);
  CHECK(correct == 2);
  CHECK(wrong == 0);
}

TEST_CASE("wrong-to-wrong moves count as false and totals add up") {
  const auto truth = labels_of({0, 0, 1, 1, 2, 2}, 3);
  const auto before = labels_of({1, 0, 1, 1, 2, 2}, 3);  // point 0 wrong (1)
  const auto after = labels_of({2, 0, 1, 1, 2, 2}, 3);   // still wrong (2)
  const auto [correct, wrong] = sss::reassignment_counts(before, after, truth);
  CHECK(correct == 0);
  CHECK(wrong == 1);

  sss::Rng rng(113);
  for (int rep = 0; rep < 20; ++rep) {
    const auto t = random_labels(18, 3, rng);
    const auto b = random_labels(18, 3, rng);
    const auto a = random_labels(18, 3, rng);
    std::size_t moved = 0;
    for (std::size_t i = 0; i < 18; ++i) moved += b.labels[i] != a.labels[i] ? 1 : 0;
    const auto [c, f] = sss::reassignment_counts(b, a, t);
    CHECK(c + f == moved);
  }
}

TEST_CASE("projection_error_curve") {
  sss::Rng rng(127);
  std::vector<sss::Matrix> trace;
  for (int i = 0; i < 4; ++i) trace.push_back(oracles::random_matrix(5, 5, rng));
  const sss::ResidualProjection ref{trace[2]};

  const auto curve = sss::projection_error_curve(trace, ref);
  REQUIRE(curve.size() == 4);
  CHECK(curve[2] == 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(curve[i] == doctest::Approx(sss::frobenius_distance_sq(trace[i], ref.matrix)));

  const std::vector<sss::Matrix> one = {trace[0]};
  const auto single = sss::projection_error_curve(one, ref);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == sss::frobenius_distance_sq(trace[0], ref.matrix));

  std::vector<sss::Matrix> bad = {sss::Matrix(3, 3)};
  CHECK_THROWS_AS(sss::projection_error_curve(bad, ref), sss::Error);
}

TEST_CASE("metric invariances under relabeling") {
  sss::Rng rng(131);
  for (int rep = 0; rep < 10; ++rep) {
    const auto pred = random_labels(16, 3, rng);
    const auto truth = random_labels(16, 3, rng);
    const int perm[3] = {1, 2, 0};
    Clustering pred_p = pred;
    for (auto& l : pred_p.labels) l = perm[l];
    CHECK(sss::clustering_error(pred, truth) ==
          doctest::Approx(sss::clustering_error(pred_p, truth)).epsilon(1e-15));
    CHECK(sss::nmi(pred, truth) == doctest::Approx(sss::nmi(pred_p, truth)).epsilon(1e-12));
  }
}
