#include "doctest.h"

#include <cmath>
#include <vector>

#include "sss/kernels.hpp"
#include "sss/rng.hpp"

using sss::kernels::Ops;

namespace {

std::vector<double> random_vec(std::size_t n, sss::Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-10.0, 10.0);
  return v;
}

// relative tolerance scaled by length: backends accumulate in different orders
bool close(double a, double b, double n) {
  const double tol = 1e-13 * (n + 1.0) * std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol;
}

const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 100, 257};

void check_backend_equivalence(const Ops& ref, const Ops& alt) {
  sss::Rng rng(1234);
  for (std::size_t n : kLengths) {
    auto x = random_vec(n, rng);
    auto y = random_vec(n, rng);

    CHECK(close(ref.dot(x.data(), y.data(), n), alt.dot(x.data(), y.data(), n), double(n)));
    CHECK(close(ref.nrm2_sq(x.data(), n), alt.nrm2_sq(x.data(), n), double(n)));
    CHECK(close(ref.dist_sq(x.data(), y.data(), n), alt.dist_sq(x.data(), y.data(), n), double(n)));
    for (double p : {1.0, 1.5, 2.0, 2.7})
      CHECK(close(ref.sum_abs_pow(x.data(), n, p), alt.sum_abs_pow(x.data(), n, p), double(n)));

    auto y_ref = y, y_alt = y;
    ref.axpy(0.37, x.data(), y_ref.data(), n);
    alt.axpy(0.37, x.data(), y_alt.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(close(y_ref[i], y_alt[i], 1.0));

    auto x_ref = x, x_alt = x;
    ref.scal(-1.75, x_ref.data(), n);
    alt.scal(-1.75, x_alt.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(x_ref[i] == x_alt[i]);  // one multiply each

    const double c = std::cos(0.83), s = std::sin(0.83);
    auto xr = x, yr = y, xa = x, ya = y;
    ref.rot(xr.data(), yr.data(), c, s, n);
    alt.rot(xa.data(), ya.data(), c, s, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(close(xr[i], xa[i], 1.0));
      CHECK(close(yr[i], ya[i], 1.0));
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels compute the plain-loop definitions") {
  const Ops& k = sss::kernels::scalar();
  const std::vector<double> x = {1.0, -2.0, 3.0};
  const std::vector<double> y = {0.5, 4.0, -1.0};
  CHECK(k.dot(x.data(), y.data(), 3) == doctest::Approx(0.5 - 8.0 - 3.0));
  CHECK(k.nrm2_sq(x.data(), 3) == doctest::Approx(14.0));
  CHECK(k.dist_sq(x.data(), y.data(), 3) == doctest::Approx(0.25 + 36.0 + 16.0));
  CHECK(k.sum_abs_pow(x.data(), 3, 1.0) == doctest::Approx(6.0));
  CHECK(k.sum_abs_pow(x.data(), 3, 2.0) == doctest::Approx(14.0));
  CHECK(k.sum_abs_pow(x.data(), 3, 1.5) ==
        doctest::Approx(1.0 + std::pow(2.0, 1.5) + std::pow(3.0, 1.5)));

  std::vector<double> ya = y;
  k.axpy(2.0, x.data(), ya.data(), 3);
  CHECK(ya[0] == doctest::Approx(2.5));
  CHECK(ya[1] == doctest::Approx(0.0));
  CHECK(ya[2] == doctest::Approx(5.0));
}

TEST_CASE("rot is an isometry and zeroes the target cross product") {
  const Ops& k = sss::kernels::scalar();
  sss::Rng rng(7);
  std::vector<double> x = random_vec(64, rng), y = random_vec(64, rng);
  const double before = k.nrm2_sq(x.data(), 64) + k.nrm2_sq(y.data(), 64);
  const double c = std::cos(1.1), s = std::sin(1.1);
  k.rot(x.data(), y.data(), c, s, 64);
  const double after = k.nrm2_sq(x.data(), 64) + k.nrm2_sq(y.data(), 64);
  CHECK(after == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("SIMD backends match the scalar reference") {
  bool compared = false;
  if (const Ops* avx2 = sss::kernels::avx2_ops(); avx2 && sss::kernels::cpu_has_avx2()) {
    check_backend_equivalence(sss::kernels::scalar(), *avx2);
    compared = true;
  }
  if (const Ops* neon = sss::kernels::neon_ops()) {
    check_backend_equivalence(sss::kernels::scalar(), *neon);
    compared = true;
  }
  if (!compared)
    MESSAGE("no SIMD backend available on this machine; scalar-only build exercised");
  // whatever was dispatched must agree with the reference as well
  check_backend_equivalence(sss::kernels::scalar(), sss::kernels::active());
}
