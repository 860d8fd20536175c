#pragma once

// Portable seeded randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; the transforms below are written
// out here instead of using <random> distributions, whose algorithms are
// implementation-defined. Streams are therefore reproducible across
// compilers and platforms.

#include <cstddef>
#include <cstdint>
#include <random>

namespace pcmkit {

/// One splitmix64 step; advances state.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for sub-stream `id` of a master seed, so that element t of a batch
/// can be generated independently of elements 0..t-1.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t id) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal by the Box-Muller cosine branch.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace pcmkit
