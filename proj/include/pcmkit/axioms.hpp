#pragma once

// Numerical checks of the three regularity axioms for 3x3 matrices:
//   1. consistent matrices score 0;
//   2. values lie in [0, 1) (strict) or [0, inf) (relaxed);
//   3. along a_ik, with a_ij and a_jk fixed, the index is quasi-convex with
//      its minimum at a_ik = a_ij a_jk.
// Quasi-convexity is tested as unimodality on a finite log-spaced grid.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcmkit/kernels.hpp"
#include "pcmkit/pcm.hpp"

namespace pcmkit {

struct ScanGrid {
  double lo = 0.1;
  double hi = 40.0;
  std::size_t points = 401;
};

/// points values log-spaced from lo to hi inclusive; lo == hi gives {lo}.
std::vector<double> log_grid(const ScanGrid& grid);

struct Unimodality {
  bool unimodal = false;
  std::size_t argmin = 0;
};

/// Non-increasing up to the first minimum, non-decreasing after it. Steps
/// against the trend smaller than rel_tol * max(1, |value|) are tolerated.
Unimodality analyze_unimodal(std::span<const double> values,
                             double rel_tol = 1e-12);

enum class Axiom2Bound { strict_unit, relaxed };

struct AxiomOptions {
  Axiom2Bound bound = Axiom2Bound::strict_unit;
  std::size_t samples = 1000;
  /// Axiom 3 scans a_ik over [x*/span, x* span] with x* = a_ij a_jk.
  std::size_t grid_points = 401;
  double grid_span = 64.0;
  double zero_tol = 1e-9;
  std::size_t max_witnesses = 8;
  Exec exec = Exec::parallel;
};

struct AxiomWitness {
  int axiom = 0;
  std::uint64_t sample = 0;
  Pcm matrix = Pcm::uniform(3);
  double value = 0.0;
  std::string detail;
};

struct AxiomCheckReport {
  bool axiom1_holds = true;
  bool axiom2_holds = true;
  Axiom2Bound bound = Axiom2Bound::strict_unit;
  /// Evaluated only when the sampler yields 3x3 matrices.
  std::optional<bool> axiom3_quasiconvex_along_entries;
  std::vector<AxiomWitness> witnesses;
  std::size_t samples = 0;

  bool all_hold() const {
    return axiom1_holds && axiom2_holds &&
           axiom3_quasiconvex_along_entries.value_or(true);
  }
};

using Sampler = std::function<Pcm(std::uint64_t)>;

/// Runs the checks on samples 0..opts.samples-1 from the sampler. The
/// report is identical for serial and parallel execution.
AxiomCheckReport check_axioms(const IndexFunction& index, const Sampler& sampler,
                              const AxiomOptions& opts = {});

}  // namespace pcmkit
