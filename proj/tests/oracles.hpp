#pragma once

// Brute-force reference computations used only by the tests. None of them
// shares code with the library paths they check.

#include <cstddef>
#include <vector>

#include "pcmkit/pcm.hpp"

namespace pcmkit::oracle {

/// det(A - lambda I) of a 3x3 matrix by cofactor expansion.
double det3_shifted(const Pcm& m, double lambda);

/// Root of det(A - lambda I) on [lo, hi] by bisection; the sign must change.
double lambda_max_3x3_bisection(const Pcm& m, double lo, double hi);

/// GCI as the defining sum, with w_i = (prod_j a_ij)^(1/n) formed from
/// products rather than logarithms.
double gci_direct_sum(const Pcm& m);

/// RE by solving the least-squares problem min_v sum_ij (c_ij - v_i + v_j)^2
/// through its normal equations (v_n pinned to 0, Gaussian elimination).
double re_normal_equations(const Pcm& m);

/// Singular values by one-sided (Hestenes) Jacobi rotations, descending.
std::vector<double> singular_values_one_sided_jacobi(const Pcm& m);

/// sqrt(sum_{t>=2} sigma_t^2) from the Jacobi singular values.
double rank_one_distance(const Pcm& m);

/// Number of triads i<j<k containing position (p, q), by enumeration.
std::size_t triads_containing(std::size_t n, std::size_t p, std::size_t q);

}  // namespace pcmkit::oracle
