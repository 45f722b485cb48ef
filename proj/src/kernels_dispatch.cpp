#include <cstdlib>
#include <string>

#include "sss/kernels.hpp"

namespace sss::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Ops& pick() {
  const char* env = std::getenv("STABLE_SUBSPACE_SIMD");
  const std::string want = env ? env : "auto";
  if (want == "scalar") return scalar();
  if (want == "avx2" && avx2_ops() && cpu_has_avx2()) return *avx2_ops();
  if (want == "neon" && neon_ops()) return *neon_ops();
  // auto (and unsupported explicit requests)
  if (avx2_ops() && cpu_has_avx2()) return *avx2_ops();
  if (neon_ops()) return *neon_ops();
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& chosen = pick();
  return chosen;
}

}  // namespace sss::kernels
