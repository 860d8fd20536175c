#include "pcmkit/axioms.hpp"

#include <algorithm>
#include <cmath>

#include "pcmkit/error.hpp"
#include "pcmkit/priority.hpp"

namespace pcmkit {

std::vector<double> log_grid(const ScanGrid& grid) {
  if (!(grid.lo > 0.0) || !(grid.hi >= grid.lo) || grid.points == 0) {
    throw Error(Errc::bad_parameter, "scan grid needs 0 < lo <= hi and points >= 1");
  }
  if (grid.points == 1 || grid.lo == grid.hi) return {grid.lo};
  const double a = std::log(grid.lo), b = std::log(grid.hi);
  const double step = (b - a) / static_cast<double>(grid.points - 1);
  std::vector<double> xs(grid.points);
  for (std::size_t t = 0; t < grid.points; ++t)
    xs[t] = std::exp(a + step * static_cast<double>(t));
  xs.front() = grid.lo;
  xs.back() = grid.hi;
  return xs;
}

Unimodality analyze_unimodal(std::span<const double> values, double rel_tol) {
  if (values.empty()) return {false, 0};
  const auto argmin = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  auto slack = [&](double v) { return rel_tol * std::max(1.0, std::abs(v)); };
  for (std::size_t t = 1; t <= argmin; ++t)
    if (values[t] > values[t - 1] + slack(values[t - 1])) return {false, argmin};
  for (std::size_t t = argmin + 1; t < values.size(); ++t)
    if (values[t] < values[t - 1] - slack(values[t - 1])) return {false, argmin};
  return {true, argmin};
}

namespace {

struct SampleOutcome {
  Pcm sample = Pcm::uniform(3);
  double consistent_value = 0.0;
  double value = 0.0;
  bool scanned = false;
  bool unimodal = true;
  std::size_t argmin = 0;
  std::size_t centre = 0;
};

SampleOutcome run_sample(const IndexFunction& index, const Sampler& sampler,
                         const AxiomOptions& opts, std::uint64_t id) {
  SampleOutcome out;
  out.sample = sampler(id);
  out.value = index(out.sample);
  out.consistent_value = index(ratio_matrix(geometric_mean_priority(out.sample)));

  if (out.sample.order() == 3) {
    const double target = out.sample(0, 1) * out.sample(1, 2);
    const auto xs = log_grid(
        {target / opts.grid_span, target * opts.grid_span, opts.grid_points});
    std::vector<double> ys(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t)
      ys[t] = index(out.sample.with_entry(0, 2, xs[t]));
    const auto u = analyze_unimodal(ys);
    out.scanned = true;
    out.unimodal = u.unimodal;
    out.argmin = u.argmin;
    out.centre = (xs.size() - 1) / 2;
  }
  return out;
}

}  // namespace

AxiomCheckReport check_axioms(const IndexFunction& index, const Sampler& sampler,
                              const AxiomOptions& opts) {
  const auto outcomes = kernels::map_indexed<SampleOutcome>(
      opts.samples,
      [&](std::size_t t) { return run_sample(index, sampler, opts, t); },
      opts.exec);

  AxiomCheckReport rep;
  rep.bound = opts.bound;
  rep.samples = opts.samples;
  bool any_scanned = false, all_quasiconvex = true;

  auto witness = [&](int axiom, std::uint64_t id, const Pcm& m, double v,
                     std::string detail) {
    if (rep.witnesses.size() < opts.max_witnesses)
      rep.witnesses.push_back({axiom, id, m, v, std::move(detail)});
  };

  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    if (!(std::abs(o.consistent_value) <= opts.zero_tol)) {
      rep.axiom1_holds = false;
      witness(1, t, ratio_matrix(geometric_mean_priority(o.sample)),
              o.consistent_value, "nonzero value on a consistent matrix");
    }
    const bool in_bound =
        o.value >= 0.0 &&
        (opts.bound == Axiom2Bound::relaxed ? std::isfinite(o.value) : o.value < 1.0);
    if (!in_bound) {
      rep.axiom2_holds = false;
      witness(2, t, o.sample, o.value,
              opts.bound == Axiom2Bound::relaxed ? "value outside [0, inf)"
                                                  : "value outside [0, 1)");
    }
    if (o.scanned) {
      any_scanned = true;
      const auto off = o.argmin > o.centre ? o.argmin - o.centre : o.centre - o.argmin;
      if (!o.unimodal || off > 1) {
        all_quasiconvex = false;
        witness(3, t, o.sample, o.value,
                !o.unimodal ? "scan along a_13 is not unimodal"
                            : "scan minimum is " + std::to_string(off) +
                                  " grid steps from a_12 a_23");
      }
    }
  }
  if (any_scanned) rep.axiom3_quasiconvex_along_entries = all_quasiconvex;
  return rep;
}

}  // namespace pcmkit
