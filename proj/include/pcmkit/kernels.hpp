#pragma once

// Data-parallel kernels. Each kernel has a plain serial loop, which is the
// reference used by the tests, and an OpenMP version. Results are written by
// index, so both produce identical output regardless of scheduling. Any
// reduction over the results is done serially by the caller, in index order.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "pcmkit/pcm.hpp"

namespace pcmkit {

enum class Exec { serial, parallel };

using IndexFunction = std::function<double(const Pcm&)>;

namespace kernels {

template <class T, class F>
std::vector<T> map_indexed_serial(std::size_t count, F&& f) {
  std::vector<T> out(count);
  for (std::size_t t = 0; t < count; ++t) out[t] = f(t);
  return out;
}

template <class T, class F>
std::vector<T> map_indexed_parallel(std::size_t count, F&& f) {
  std::vector<T> out(count);
  std::exception_ptr failure;
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long t = 0; t < total; ++t) {
    try {
      out[static_cast<std::size_t>(t)] = f(static_cast<std::size_t>(t));
    } catch (...) {
#pragma omp critical(pcmkit_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <class T, class F>
std::vector<T> map_indexed(std::size_t count, F&& f, Exec exec) {
  return exec == Exec::parallel ? map_indexed_parallel<T>(count, f)
                                : map_indexed_serial<T>(count, f);
}

/// scores[t] = index(matrices[t]).
std::vector<double> score_batch_serial(std::span<const Pcm> matrices,
                                       const IndexFunction& index);
std::vector<double> score_batch_parallel(std::span<const Pcm> matrices,
                                         const IndexFunction& index);

/// scores[t] = index(make(t)) for t < count, without keeping the matrices.
std::vector<double> score_generated(std::size_t count,
                                    const std::function<Pcm(std::size_t)>& make,
                                    const IndexFunction& index, Exec exec);

/// Evaluates f on the tensor grid axes[0] x axes[1] x ... with the last axis
/// varying fastest. Point t decodes to coordinates in row-major order.
std::vector<double> evaluate_grid_serial(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f);
std::vector<double> evaluate_grid_parallel(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f);
std::vector<double> evaluate_grid(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f, Exec exec);

/// Number of points in the tensor grid.
std::size_t grid_size(const std::vector<std::vector<double>>& axes) noexcept;

/// Coordinates of flat grid point t.
void grid_point(const std::vector<std::vector<double>>& axes, std::size_t t,
                std::span<double> coords) noexcept;

}  // namespace kernels
}  // namespace pcmkit
