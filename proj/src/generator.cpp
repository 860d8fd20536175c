#include "pcmkit/generator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pcmkit/error.hpp"
#include "pcmkit/random.hpp"

namespace pcmkit {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t id) noexcept {
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  s = a ^ id;
  splitmix64(s);
  return splitmix64(s);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::saaty_uniform: return "saaty_uniform";
    case GeneratorKind::log_uniform: return "log_uniform";
    case GeneratorKind::perturbed_consistent: return "perturbed_consistent";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto k : {GeneratorKind::saaty_uniform, GeneratorKind::log_uniform,
                 GeneratorKind::perturbed_consistent}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::unknown_name, "unknown generator '" + std::string(name) + "'");
}

double saaty_value(std::size_t index) noexcept {
  if (index < 8) return 1.0 / static_cast<double>(9 - index);
  return static_cast<double>(index - 7);
}

Pcm generate_one(const GeneratorSpec& spec, std::uint64_t id) {
  const std::size_t n = spec.n;
  if (n < 3) throw Error(Errc::bad_parameter, "generator order must be >= 3");
  if (!(spec.scale_bound >= 1.0) || !(spec.sigma >= 0.0)) {
    throw Error(Errc::bad_parameter, "generator needs scale_bound >= 1, sigma >= 0");
  }
  Rng rng(stream_seed(spec.seed, id));
  std::vector<double> grid(n * n, 1.0);
  const double log_bound = std::log(spec.scale_bound);

  switch (spec.kind) {
    case GeneratorKind::saaty_uniform:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          grid[i * n + j] = saaty_value(rng.below(kSaatyScaleSize));
      break;
    case GeneratorKind::log_uniform:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          grid[i * n + j] = std::exp(rng.uniform(-log_bound, log_bound));
      break;
    case GeneratorKind::perturbed_consistent: {
      std::vector<double> log_w(n);
      for (auto& x : log_w) x = rng.uniform(-0.5 * log_bound, 0.5 * log_bound);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const double noise = spec.sigma > 0.0 ? spec.sigma * rng.normal() : 0.0;
          grid[i * n + j] = std::exp(log_w[i] - log_w[j] + noise);
        }
      break;
    }
  }
  return Pcm::from_upper_of(n, grid);
}

std::vector<Pcm> generate(const GeneratorSpec& spec, std::size_t count) {
  std::vector<Pcm> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(generate_one(spec, t));
  return out;
}

}  // namespace pcmkit
