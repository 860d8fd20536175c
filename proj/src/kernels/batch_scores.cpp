#include "pcmkit/kernels.hpp"

namespace pcmkit::kernels {

std::vector<double> score_batch_serial(std::span<const Pcm> matrices,
                                       const IndexFunction& index) {
  return map_indexed_serial<double>(
      matrices.size(), [&](std::size_t t) { return index(matrices[t]); });
}

std::vector<double> score_batch_parallel(std::span<const Pcm> matrices,
                                         const IndexFunction& index) {
  return map_indexed_parallel<double>(
      matrices.size(), [&](std::size_t t) { return index(matrices[t]); });
}

std::vector<double> score_generated(std::size_t count,
                                    const std::function<Pcm(std::size_t)>& make,
                                    const IndexFunction& index, Exec exec) {
  return map_indexed<double>(
      count, [&](std::size_t t) { return index(make(t)); }, exec);
}

}  // namespace pcmkit::kernels
