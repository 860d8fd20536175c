#include <vector>

#include "pcmkit/kernels.hpp"

namespace pcmkit::kernels {

std::size_t grid_size(const std::vector<std::vector<double>>& axes) noexcept {
  if (axes.empty()) return 0;
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  return total;
}

void grid_point(const std::vector<std::vector<double>>& axes, std::size_t t,
                std::span<double> coords) noexcept {
  for (std::size_t d = axes.size(); d-- > 0;) {
    const std::size_t len = axes[d].size();
    coords[d] = axes[d][t % len];
    t /= len;
  }
}

namespace {

template <class Map>
std::vector<double> evaluate_with(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f, Map map) {
  return map(grid_size(axes), [&](std::size_t t) {
    std::vector<double> coords(axes.size());
    grid_point(axes, t, coords);
    return f(coords);
  });
}

}  // namespace

std::vector<double> evaluate_grid_serial(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f) {
  return evaluate_with(axes, f, [](std::size_t n, auto&& g) {
    return map_indexed_serial<double>(n, g);
  });
}

std::vector<double> evaluate_grid_parallel(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f) {
  return evaluate_with(axes, f, [](std::size_t n, auto&& g) {
    return map_indexed_parallel<double>(n, g);
  });
}

std::vector<double> evaluate_grid(
    const std::vector<std::vector<double>>& axes,
    const std::function<double(std::span<const double>)>& f, Exec exec) {
  return exec == Exec::parallel ? evaluate_grid_parallel(axes, f)
                                : evaluate_grid_serial(axes, f);
}

}  // namespace pcmkit::kernels
