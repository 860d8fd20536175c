#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pcmkit/pcm.hpp"

namespace pcmkit {

enum class GeneratorKind { saaty_uniform, log_uniform, perturbed_consistent };

std::string_view to_string(GeneratorKind kind) noexcept;
GeneratorKind parse_generator_kind(std::string_view name);

/// The 17 values 1/9, 1/8, ..., 1/2, 1, 2, ..., 9 in increasing order.
double saaty_value(std::size_t index) noexcept;
inline constexpr std::size_t kSaatyScaleSize = 17;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::saaty_uniform;
  std::size_t n = 6;
  std::uint64_t seed = 0;
  /// log_uniform: ln a_ij ~ U[-ln b, ln b]. perturbed_consistent: ln w_i ~
  /// U[-ln(b)/2, ln(b)/2]. Unused by saaty_uniform.
  double scale_bound = 9.0;
  /// perturbed_consistent: a_ij = (w_i / w_j) exp(e_ij), e_ij ~ N(0, sigma^2).
  double sigma = 0.5;
};

/// Matrix number `id` of the stream. Upper-triangle entries are drawn in
/// row-major order from an engine seeded with stream_seed(spec.seed, id).
Pcm generate_one(const GeneratorSpec& spec, std::uint64_t id);

/// Matrices 0..count-1 of the stream.
std::vector<Pcm> generate(const GeneratorSpec& spec, std::size_t count);

}  // namespace pcmkit
