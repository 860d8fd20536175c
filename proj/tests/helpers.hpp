#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "pcmkit/generator.hpp"
#include "pcmkit/random.hpp"

namespace pcmkit::test {

inline std::vector<Pcm> ensemble(GeneratorKind kind, std::size_t n, std::size_t count,
                                 std::uint64_t seed, double sigma = 0.5) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  spec.sigma = sigma;
  return generate(spec, count);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 1e-14) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

}  // namespace pcmkit::test
