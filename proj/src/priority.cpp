#include "pcmkit/priority.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pcmkit/error.hpp"

namespace pcmkit {

namespace {

void multiply(const Pcm& m, const std::vector<double>& w,
              std::vector<double>& out) {
  const std::size_t n = m.order();
  const auto a = m.row_major();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * w[j];
    out[i] = s;
  }
}

void normalize(std::vector<double>& w) {
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= s;
}

}  // namespace

EigenResult eigen_priority(const Pcm& m, const PowerOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw Error(Errc::bad_parameter, "power iteration needs tol > 0, max_iter >= 1");
  }
  const std::size_t n = m.order();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  std::vector<double> aw(n);

  double lambda = 0.0, residual = 0.0;
  for (long it = 1; it <= opts.max_iter; ++it) {
    multiply(m, w, aw);
    double sum = 0.0, lo = aw[0] / w[0], hi = lo;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = aw[i] / w[i];
      sum += q;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    lambda = sum / static_cast<double>(n);
    residual = std::max(hi - lambda, lambda - lo);
    if (residual <= opts.tol) {
      return {lambda, {w, Normalization::sum_to_one}, it, residual};
    }
    w = aw;
    normalize(w);
  }
  throw NoConvergence("power iteration did not converge after " +
                          std::to_string(opts.max_iter) +
                          " iterations (residual " + std::to_string(residual) + ")",
                      residual, opts.max_iter);
}

PriorityVector geometric_mean_priority(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(m(i, j));
    w[i] = std::exp(log_sum / static_cast<double>(n));
  }
  normalize(w);
  return {std::move(w), Normalization::sum_to_one};
}

Pcm ratio_matrix(const PriorityVector& w) {
  const std::size_t n = w.weights.size();
  for (double x : w.weights) {
    if (!std::isfinite(x) || x <= 0.0) {
      throw Error(Errc::non_positive_entry, "priority weights must be positive");
    }
  }
  std::vector<double> grid(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      grid[i * n + j] = w.weights[i] / w.weights[j];
  return Pcm::from_upper_of(n, grid);
}

}  // namespace pcmkit
