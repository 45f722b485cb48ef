#include "doctest.h"

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "sss/linalg.hpp"
#include "sss/rng.hpp"

using sss::Matrix;

namespace {

Matrix reconstruct(const sss::SvdResult& s) {
  const std::size_t d = s.left_basis.rows();
  const std::size_t n = s.right_basis.rows();
  const std::size_t r = s.singular_values.size();
  Matrix x(d, n);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < d; ++i)
        x(i, j) += s.singular_values[l] * s.left_basis(i, l) * s.right_basis(j, l);
  return x;
}

double max_orthonormality_defect(const Matrix& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.cols(); ++i)
    for (std::size_t j = i; j < u.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < u.rows(); ++r) acc += u(r, i) * u(r, j);
      worst = std::max(worst, std::fabs(acc - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

void check_svd_contract(const Matrix& x) {
  const sss::SvdResult s = sss::svd(x);
  const std::size_t r = std::min(x.rows(), x.cols());
  REQUIRE(s.singular_values.size() == r);
  for (std::size_t i = 0; i + 1 < r; ++i) CHECK(s.singular_values[i] >= s.singular_values[i + 1]);
  for (double sv : s.singular_values) CHECK(sv >= 0.0);
  CHECK(max_orthonormality_defect(s.left_basis) <= 1e-10);
  CHECK(max_orthonormality_defect(s.right_basis) <= 1e-10);
  const double xnorm = std::sqrt(sss::frobenius_norm_sq(x));
  const double resid = std::sqrt(sss::frobenius_distance_sq(x, reconstruct(s)));
  CHECK(resid <= 1e-8 * std::max(1.0, xnorm));
}

}  // namespace

TEST_CASE("svd of the identity") {
  const Matrix x = Matrix::identity(3);
  const sss::SvdResult s = sss::svd(x);
  for (double sv : s.singular_values) CHECK(sv == doctest::Approx(1.0).epsilon(1e-12));
  check_svd_contract(x);
}

TEST_CASE("svd of a rank-1 outer product") {
  // u * v^T with ||u|| = 2, ||v|| = 1
  Matrix x(4, 3);
  const double u[4] = {2.0 / std::sqrt(2.0), 0.0, 2.0 / std::sqrt(2.0), 0.0};  // norm 2
  const double v[3] = {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), -1.0 / std::sqrt(3.0)};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 4; ++i) x(i, j) = u[i] * v[j];
  const sss::SvdResult s = sss::svd(x);
  CHECK(s.singular_values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.singular_values[1] <= 1e-10);
  CHECK(s.singular_values[2] <= 1e-10);
  check_svd_contract(x);
}

TEST_CASE("svd singular values match an independent eigensolver on X^T X") {
  sss::Rng rng(42);
  const Matrix x = oracles::random_matrix(8, 5, rng);
  const sss::SvdResult s = sss::svd(x);

  const double resid = std::sqrt(sss::frobenius_distance_sq(x, reconstruct(s)));
  CHECK(resid <= 1e-10 * std::max(1.0, std::sqrt(sss::frobenius_norm_sq(x))));

  const auto ev = oracles::sym_eigenvalues(oracles::gram(x));
  REQUIRE(ev.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const double expected = std::sqrt(std::max(0.0, ev[i]));
    CHECK(s.singular_values[i] == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("svd handles wide, tall, tiny and zero matrices") {
  sss::Rng rng(3);
  check_svd_contract(oracles::random_matrix(5, 9, rng));   // wide: internal transpose
  check_svd_contract(oracles::random_matrix(9, 5, rng));
  check_svd_contract(oracles::random_matrix(1, 1, rng));
  check_svd_contract(oracles::random_matrix(1, 6, rng));
  check_svd_contract(oracles::random_matrix(6, 1, rng));
  Matrix zero(4, 3);
  check_svd_contract(zero);
  const auto s = sss::svd(zero);
  for (double sv : s.singular_values) CHECK(sv == 0.0);
}

TEST_CASE("svd energy identity: sum of squared singular values is ||X||_F^2") {
  sss::Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.below(12));
    const std::size_t cols = 1 + static_cast<std::size_t>(rng.below(12));
    const Matrix x = oracles::random_matrix(rows, cols, rng);
    const auto s = sss::svd(x);
    double acc = 0.0;
    for (double sv : s.singular_values) acc += sv * sv;
    const double ref = sss::frobenius_norm_sq(x);
    CHECK(std::fabs(acc - ref) <= 1e-8 * std::max(1.0, ref));
  }
}

TEST_CASE("svd is bit-stable across repeated calls") {
  sss::Rng rng(99);
  const Matrix x = oracles::random_matrix(10, 7, rng);
  const auto a = sss::svd(x);
  const auto b = sss::svd(x);
  CHECK(a.singular_values == b.singular_values);
  CHECK(a.left_basis == b.left_basis);
  CHECK(a.right_basis == b.right_basis);
}

TEST_CASE("svd sign convention: largest-magnitude entry of each left vector is nonnegative") {
  sss::Rng rng(5);
  const Matrix x = oracles::random_matrix(6, 6, rng);
  const auto s = sss::svd(x);
  for (std::size_t j = 0; j < 6; ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
      if (std::fabs(s.left_basis(i, j)) > std::fabs(best)) best = s.left_basis(i, j);
    CHECK(best >= 0.0);
  }
}

TEST_CASE("svd rejects non-finite input") {
  Matrix x(2, 2);
  x(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(sss::svd(x), doctest::Contains("NaN"), sss::Error);
  x(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(sss::svd(x), sss::Error);
}

TEST_CASE("frobenius_distance_sq") {
  sss::Rng rng(21);
  const Matrix a = oracles::random_matrix(4, 4, rng);
  const Matrix b = oracles::random_matrix(4, 4, rng);

  CHECK(sss::frobenius_distance_sq(a, a) == 0.0);
  CHECK(sss::frobenius_distance_sq(Matrix::identity(2), Matrix(2, 2)) == doctest::Approx(2.0));

  double ref = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = a(i, j) - b(i, j);
      ref += d * d;
    }
  CHECK(sss::frobenius_distance_sq(a, b) == doctest::Approx(ref).epsilon(1e-14));
  CHECK(sss::frobenius_distance_sq(a, b) == sss::frobenius_distance_sq(b, a));

  CHECK_THROWS_AS(sss::frobenius_distance_sq(a, Matrix(3, 4)), sss::Error);
}
