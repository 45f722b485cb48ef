// NEON variants (aarch64, where NEON is baseline).

#include "sss/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace sss::kernels {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2) acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_neon(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void rot_neon(double* x, double* y, double c, double s, std::size_t n) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    vst1q_f64(x + i, vsubq_f64(vmulq_f64(vc, vx), vmulq_f64(vs, vy)));
    vst1q_f64(y + i, vaddq_f64(vmulq_f64(vs, vx), vmulq_f64(vc, vy)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double nrm2_sq_neon(const double* x, std::size_t n) { return dot_neon(x, x, n); }

double dist_sq_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc = vfmaq_f64(acc, d, d);
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

double sum_abs_pow_neon(const double* x, std::size_t n, double p) {
  std::size_t i = 0;
  if (p == 2.0) return nrm2_sq_neon(x, n);
  if (p == 1.0) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) r += std::fabs(x[i]);
    return r;
  }
  if (p == 1.5) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; i + 2 <= n; i += 2) {
      const float64x2_t a = vabsq_f64(vld1q_f64(x + i));
      acc = vfmaq_f64(acc, a, vsqrtq_f64(a));
    }
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) {
      const double a = std::fabs(x[i]);
      r += a * std::sqrt(a);
    }
    return r;
  }
  double r = 0.0;
  for (i = 0; i < n; ++i) r += std::pow(std::fabs(x[i]), p);
  return r;
}

const Ops kNeonOps = {
    "neon",       dot_neon,     axpy_neon,    scal_neon,
    rot_neon,     nrm2_sq_neon, dist_sq_neon, sum_abs_pow_neon,
};

}  // namespace

const Ops* neon_ops() { return &kNeonOps; }

}  // namespace sss::kernels

#else

namespace sss::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace sss::kernels

#endif
