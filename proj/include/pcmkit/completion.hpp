#pragma once

// Completion of incomplete matrices by minimizing an inconsistency index
// over the missing entries. The search runs on y = ln(a) for every missing
// a, so positivity holds by construction; points with |y| > kMaxLogEntry
// score +inf.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pcmkit/kernels.hpp"
#include "pcmkit/pcm.hpp"

namespace pcmkit {

enum class CompletionMethod { nelder_mead_log, cyclic_coordinate_log, grid_oracle };

std::string_view to_string(CompletionMethod m) noexcept;
CompletionMethod parse_completion_method(std::string_view name);

inline constexpr double kMaxLogEntry = 30.0;
inline constexpr std::uint64_t kDefaultCompletionSeed = 7;

struct CompletionOptions {
  CompletionMethod method = CompletionMethod::nelder_mead_log;
  /// Start 0 is the warm start; the others perturb it by
  /// start_spread * N(0, 1) per log coordinate.
  std::size_t starts = 5;
  std::uint64_t seed = kDefaultCompletionSeed;
  double start_spread = 1.0;
  /// Nelder-Mead stops when the simplex diameter in log space drops below
  /// tol; coordinate descent when a full cycle moves no coordinate by more.
  double tol = 1e-9;
  /// Budget per start.
  std::size_t max_evaluations = 50'000;
  double initial_step = 0.5;
  /// Replaces the warm start, one value per missing entry.
  std::optional<std::vector<double>> initial;
  Exec exec = Exec::parallel;
};

struct CompletionResult {
  Pcm filled = Pcm::uniform(2);
  /// One entry per missing position, in IncompletePcm::missing() order.
  std::vector<UpperEntry> values;
  double objective = 0.0;
  std::size_t evaluations = 0;
  CompletionMethod method = CompletionMethod::nelder_mead_log;
  /// False when the best start ran out of budget before meeting tol; the
  /// result is still the best point found.
  bool converged = true;
};

/// Each missing a_ij starts at the geometric mean of a_ik a_kj over all k
/// with both entries known, or 1 if there is no such k.
std::vector<double> warm_start(const IncompletePcm& m);

/// Throws Error(nothing_to_complete) when no entry is missing and
/// Error(disconnected) when the known entries do not connect all
/// alternatives.
CompletionResult complete(const IncompletePcm& m, const IndexFunction& index,
                          const CompletionOptions& opts = {});

struct OracleGrid {
  double lo = 1.0 / 9.0;
  double hi = 9.0;
  std::size_t resolution = 601;
  /// Each refinement re-grids the box spanned by the neighbours of the
  /// current best point with refine_resolution points per axis.
  std::size_t refinements = 4;
  std::size_t refine_resolution = 41;
};

inline constexpr std::size_t kMaxOracleMissing = 3;

/// Exhaustive log-grid search. Throws Error(too_many_missing) for more than
/// kMaxOracleMissing unknowns.
CompletionResult grid_oracle(const IncompletePcm& m, const IndexFunction& index,
                             const OracleGrid& grid = {},
                             Exec exec = Exec::parallel);

}  // namespace pcmkit
