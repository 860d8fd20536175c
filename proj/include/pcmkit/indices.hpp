#pragma once

// Inconsistency indices and threshold verdicts.
//
//   CI  = (lambda_max - n) / (n - 1)
//   CR  = CI / RI(n), threshold 0.1
//   K   = max over triads i<j<k of phi(a_ij, a_jk, a_ik), threshold 1/3
//   GCI = 2 / ((n-1)(n-2)) * sum_{i<j} (ln a_ij - ln(w_i / w_j))^2,
//         w the geometric-mean priority vector
//   RE  = sum_ij e_ij^2 / sum_ij c_ij^2 with c_ij = ln a_ij,
//         r_i = mean_j c_ij and e_ij = c_ij - (r_i - r_j)
//   IM  = sqrt(sum_{t>=2} sigma_t^2), the Frobenius distance from A to its
//         best rank-one approximation, divided by n by default
//
// GCI and RE share the log residual e_ij: ln(w_i) is r_i up to a constant.

#include <optional>
#include <string>
#include <string_view>

#include "pcmkit/kernels.hpp"
#include "pcmkit/pcm.hpp"
#include "pcmkit/priority.hpp"

namespace pcmkit {

class RandomIndexTable;

enum class IndexKind { ci, cr, k, gci, re, im };
enum class Verdict { acceptable, needs_revision };
enum class ImScale { raw, per_order };

inline constexpr double kCrThreshold = 0.1;
inline constexpr double kKThreshold = 1.0 / 3.0;

std::string_view to_string(IndexKind kind) noexcept;
std::string_view to_string(Verdict v) noexcept;
/// Accepts "ci", "cr", "k", "gci", "re", "im". Throws Error(unknown_name).
IndexKind parse_index_kind(std::string_view name);

struct IndexReport {
  IndexKind index = IndexKind::ci;
  double value = 0.0;
  std::optional<double> threshold;
  std::optional<Verdict> verdict;
  std::size_t n = 0;
  /// Set when the index is undefined for this input and value holds the
  /// conventional 0 (RE on the all-ones matrix).
  bool degenerate = false;
};

IndexReport ci(const Pcm& m, const PowerOptions& opts = {});
/// Throws Error(order_out_of_table) when n is not in the table.
IndexReport cr(const Pcm& m, const RandomIndexTable& table,
               const PowerOptions& opts = {});
IndexReport k_index(const Pcm& m);
IndexReport gci(const Pcm& m);
IndexReport re_index(const Pcm& m);
/// Throws Error(svd_failure) if the decomposition does not succeed.
IndexReport im_index(const Pcm& m, ImScale scale = ImScale::per_order);

/// Dispatch by kind; `table` is required for cr only.
IndexReport evaluate(IndexKind kind, const Pcm& m,
                     const RandomIndexTable* table = nullptr);

/// The index value as a plain function, for optimizers and batch kernels.
IndexFunction index_function(IndexKind kind,
                             const RandomIndexTable* table = nullptr);

}  // namespace pcmkit
