#pragma once

// Parametric and Monte-Carlo studies: index-vs-index scatter over random
// ensembles, quasi-convexity scans along one entry of a 3x3 matrix, the
// A_KS(n, x) asymptotics, and the counterexample suite.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmkit/axioms.hpp"
#include "pcmkit/generator.hpp"
#include "pcmkit/indices.hpp"

namespace pcmkit {

inline constexpr std::uint64_t kDefaultSeed = 20160101;

struct ScatterRow {
  std::size_t matrix_id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct ScatterSummary {
  double pearson = 0.0;
  double spearman = 0.0;
  /// The two matrices with the largest |rank_x - rank_y|, largest first.
  std::vector<std::size_t> discordant;
};

struct ScatterStudy {
  GeneratorSpec spec;
  IndexKind index_x = IndexKind::im;
  IndexKind index_y = IndexKind::re;
  std::vector<ScatterRow> rows;
  ScatterSummary summary;
};

/// Average ranks (1-based, ties share their mean rank).
std::vector<double> ranks(std::span<const double> v);
double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);

ScatterStudy scatter_study(const GeneratorSpec& spec, std::size_t count,
                           IndexKind index_x, IndexKind index_y,
                           Exec exec = Exec::parallel,
                           const RandomIndexTable* table = nullptr);

struct ScanResult {
  std::vector<std::pair<double, double>> points;  // (x, value)
  bool unimodal = false;
  std::size_t argmin = 0;
  double argmin_x = 0.0;
  double min_value = 0.0;
  /// a_ij a_jk for the scanned entry (i, k), j the remaining index.
  double consistent_x = 0.0;
  /// argmin_x is within one log-grid step of consistent_x.
  bool argmin_at_consistent = false;
  /// Golden-section refinement of the minimum inside the grid cells next to
  /// argmin. Only meaningful when unimodal.
  double refined_x = 0.0;
  double refined_value = 0.0;
};

/// Scans entry (i, k), i < k, of a 3x3 matrix over a log grid.
ScanResult quasiconvexity_scan(const Pcm& base, Position entry,
                               const IndexFunction& index, const ScanGrid& grid,
                               Exec exec = Exec::parallel);

struct AsymptoticRow {
  std::size_t n = 0;
  double ci = 0.0;
  std::optional<double> cr;
  double k = 0.0;
};

struct AsymptoticStudy {
  double x = 0.0;
  std::vector<AsymptoticRow> rows;
  bool ci_strictly_decreasing = false;
  bool k_constant = false;
  /// Smallest n with CR below its threshold, when CR was available.
  std::optional<std::size_t> cr_acceptable_from;
};

/// Evaluates A_KS(n, x) for n_lo <= n <= n_hi, 3 <= n_lo, n_hi <= 200.
AsymptoticStudy asymptotic_study(double x, std::size_t n_lo, std::size_t n_hi,
                                 const RandomIndexTable* table = nullptr,
                                 Exec exec = Exec::parallel);

inline constexpr std::size_t kMaxAsymptoticOrder = 200;

struct SuiteCheck {
  std::string check;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Directional claims about K, triad counts and single-entry perturbations
/// evaluated on the builtin matrices.
std::vector<SuiteCheck> counterexample_suite();

}  // namespace pcmkit
