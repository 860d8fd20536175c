#pragma once

// Priority vectors: eigenvector method (Perron pair by power iteration) and
// geometric-mean method. The logarithmic least-squares method yields exactly
// the geometric-mean vector, so it has no separate entry point.

#include <vector>

#include "pcmkit/pcm.hpp"

namespace pcmkit {

enum class Normalization { sum_to_one, geometric_raw };

struct PriorityVector {
  std::vector<double> weights;
  Normalization normalization = Normalization::sum_to_one;
};

struct PowerOptions {
  double tol = 1e-12;
  long max_iter = 10'000;
};

struct EigenResult {
  double lambda_max = 0.0;
  PriorityVector vector;
  long iterations = 0;
  /// max_i |(A w)_i - lambda_max w_i| / w_i at the returned vector.
  double residual = 0.0;
};

/// Power iteration from the uniform vector. lambda_max is the mean of the
/// ratios (A w)_i / w_i. Throws NoConvergence carrying the achieved residual
/// when max_iter is exhausted.
EigenResult eigen_priority(const Pcm& m, const PowerOptions& opts = {});

/// w_i proportional to (prod_j a_ij)^(1/n), normalized to sum 1.
PriorityVector geometric_mean_priority(const Pcm& m);

/// The consistent matrix (w_i / w_j). Requires all weights > 0.
Pcm ratio_matrix(const PriorityVector& w);

}  // namespace pcmkit
