#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace sss {

/// Deterministic PRNG (xoshiro256**, seeded via splitmix64), independent of the
/// standard library's unspecified distributions so that a fixed seed gives
/// bit-identical streams on every platform we build for.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Uniform integer in [0, n), rejection-sampled, unbiased. n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// k distinct indices from [0, n), ascending. Partial Fisher-Yates.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Deterministic child-stream derivation. Iteration i of cluster k in round r
/// seeds its generator with derive_seed(derive_seed(derive_seed(master, r), k), i),
/// which makes every iteration's draw independent of scheduling order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sss
