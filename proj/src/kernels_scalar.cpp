#include "sss/kernels.hpp"

#include <cmath>

namespace sss::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot_scalar(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double nrm2_sq_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double dist_sq_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double sum_abs_pow_scalar(const double* x, std::size_t n, double p) {
  double acc = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  } else if (p == 1.5) {
    // |x|^1.5 = |x| * sqrt(|x|), much cheaper than pow
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::fabs(x[i]);
      acc += a * std::sqrt(a);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) acc += std::pow(std::fabs(x[i]), p);
  }
  return acc;
}

const Ops kScalarOps = {
    "scalar",        dot_scalar,     axpy_scalar,        scal_scalar,
    rot_scalar,      nrm2_sq_scalar, dist_sq_scalar,     sum_abs_pow_scalar,
};

}  // namespace

const Ops& scalar() { return kScalarOps; }

}  // namespace sss::kernels
