#pragma once

#include <cstddef>

namespace sss::kernels {

/// Data-parallel primitives behind every inner loop in the library.
/// One scalar reference implementation plus SIMD variants (AVX2 on x86-64,
/// NEON on aarch64) selected once at startup. Equivalence between backends is
/// tolerance-tested, not bitwise: accumulation order differs across lanes.
struct Ops {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// x *= a
  void (*scal)(double a, double* x, std::size_t n);
  /// Plane rotation used by the Jacobi sweeps:
  ///   (x_i, y_i) <- (c*x_i - s*y_i, s*x_i + c*y_i)
  void (*rot)(double* x, double* y, double c, double s, std::size_t n);
  double (*nrm2_sq)(const double* x, std::size_t n);
  /// sum_i (a_i - b_i)^2
  double (*dist_sq)(const double* a, const double* b, std::size_t n);
  /// sum_i |x_i|^p, with fast paths for p in {1, 1.5, 2}
  double (*sum_abs_pow)(const double* x, std::size_t n, double p);
};

/// Scalar reference backend, always available.
const Ops& scalar();

/// nullptr when the build or the CPU lacks the extension.
const Ops* avx2_ops();
const Ops* neon_ops();

bool cpu_has_avx2();

/// Backend chosen at first use. Honors STABLE_SUBSPACE_SIMD=auto|scalar|avx2|neon;
/// unknown or unsupported values fall back to auto. The choice is frozen for the
/// lifetime of the process so results stay bit-stable within a run.
const Ops& active();

}  // namespace sss::kernels
