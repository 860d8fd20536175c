#include "pcmkit/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pcmkit/error.hpp"
#include "pcmkit/random.hpp"

namespace pcmkit {

std::string_view to_string(CompletionMethod m) noexcept {
  switch (m) {
    case CompletionMethod::nelder_mead_log: return "nelder_mead_log";
    case CompletionMethod::cyclic_coordinate_log: return "cyclic_coordinate_log";
    case CompletionMethod::grid_oracle: return "grid_oracle";
  }
  return "?";
}

CompletionMethod parse_completion_method(std::string_view name) {
  for (auto m : {CompletionMethod::nelder_mead_log,
                 CompletionMethod::cyclic_coordinate_log,
                 CompletionMethod::grid_oracle}) {
    if (name == to_string(m)) return m;
  }
  throw Error(Errc::unknown_name, "unknown completion method '" + std::string(name) + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Index values closer than this are rounding noise (CI carries the error of
// lambda_max). Near a consistent completion CI grows like the square of the
// offset, so without it the optimizer wanders ~1e-8 inside the flat region.
constexpr double kObjectiveResolution = 1e-14;

// Objective over log-coordinates with an evaluation counter.
class LogObjective {
 public:
  LogObjective(const IncompletePcm& m, const IndexFunction& index)
      : m_(m), index_(index) {}

  double operator()(const std::vector<double>& y) {
    ++evaluations_;
    std::vector<double> a(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
      if (!(std::abs(y[t]) <= kMaxLogEntry)) return kInf;
      a[t] = std::exp(y[t]);
    }
    const double v = index_(m_.fill(a));
    return std::isnan(v) ? kInf : v;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const IncompletePcm& m_;
  const IndexFunction& index_;
  std::size_t evaluations_ = 0;
};

struct LocalResult {
  std::vector<double> y;
  double value = kInf;
  std::size_t evaluations = 0;
  bool converged = false;
};

double simplex_diameter(const std::vector<std::vector<double>>& s) {
  double d = 0.0;
  for (std::size_t v = 1; v < s.size(); ++v)
    for (std::size_t t = 0; t < s[0].size(); ++t)
      d = std::max(d, std::abs(s[v][t] - s[0][t]));
  return d;
}

// One Nelder-Mead run with standard coefficients, simplex kept sorted so
// that vertex 0 is the best.
LocalResult nelder_mead_once(LogObjective& f, std::vector<double> start,
                             double step, double tol, std::size_t budget) {
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> s(dim + 1, start);
  std::vector<double> fv(dim + 1);
  for (std::size_t t = 0; t < dim; ++t) s[t + 1][t] += step;
  const std::size_t base = f.evaluations();
  for (std::size_t v = 0; v <= dim; ++v) fv[v] = f(s[v]);

  auto used = [&] { return f.evaluations() - base; };
  auto sort_simplex = [&] {
    std::vector<std::size_t> order(dim + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> f2;
    for (auto o : order) {
      s2.push_back(s[o]);
      f2.push_back(fv[o]);
    }
    s.swap(s2);
    fv.swap(f2);
  };
  auto along = [&](const std::vector<double>& c, double coef) {
    std::vector<double> p(dim);
    for (std::size_t t = 0; t < dim; ++t) p[t] = c[t] + coef * (s[dim][t] - c[t]);
    return p;
  };

  bool converged = false;
  while (true) {
    sort_simplex();
    if (simplex_diameter(s) < tol) {
      converged = true;
      break;
    }
    if (used() >= budget) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t t = 0; t < dim; ++t) centroid[t] += s[v][t] / static_cast<double>(dim);

    const auto xr = along(centroid, -1.0);
    const double fr = f(xr);
    if (fr < fv[0]) {
      const auto xe = along(centroid, -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        s[dim] = xe;
        fv[dim] = fe;
      } else {
        s[dim] = xr;
        fv[dim] = fr;
      }
      continue;
    }
    if (fr < fv[dim - 1]) {
      s[dim] = xr;
      fv[dim] = fr;
      continue;
    }
    const bool outside = fr < fv[dim];
    const auto xc = along(centroid, outside ? -0.5 : 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : fv[dim])) {
      s[dim] = xc;
      fv[dim] = fc;
      continue;
    }
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t t = 0; t < dim; ++t) s[v][t] = s[0][t] + 0.5 * (s[v][t] - s[0][t]);
      fv[v] = f(s[v]);
    }
  }
  return {s[0], fv[0], used(), converged};
}

// Restarts from the best vertex until a restart stops improving, which
// recovers from premature simplex collapse.
LocalResult nelder_mead(LogObjective& f, std::vector<double> start,
                        const CompletionOptions& opts) {
  LocalResult best{start, f(start), 1, false};
  double step = opts.initial_step;
  for (int round = 0; round < 4; ++round) {
    const std::size_t spent = best.evaluations;
    if (spent >= opts.max_evaluations) break;
    auto r = nelder_mead_once(f, best.y, step, opts.tol, opts.max_evaluations - spent);
    r.evaluations += spent;
    const bool improved = r.value < best.value;
    if (improved || r.value == best.value) {
      const bool converged = r.converged;
      best = std::move(r);
      best.converged = converged;
    }
    if (!improved) break;
    step = std::max(10.0 * opts.tol, step * 0.1);
  }
  return best;
}

// Golden-section search on [lo, hi] for coordinate t.
double golden_section(LogObjective& f, std::vector<double>& y, std::size_t t,
                      double lo, double hi, double tol, double& best) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto at = [&](double v) {
    auto p = y;
    p[t] = v;
    return f(p);
  };
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double fc = at(c), fd = at(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = at(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = at(d);
    }
  }
  const double x = fc < fd ? c : d;
  const double fx = std::min(fc, fd);
  if (fx < best) {
    best = fx;
    return x;
  }
  return y[t];
}

LocalResult coordinate_descent(LogObjective& f, std::vector<double> y,
                               const CompletionOptions& opts) {
  constexpr double kHalfWidth = 4.5;  // about ln 90
  const std::size_t base = f.evaluations();
  double best = f(y);
  bool converged = false;
  while (f.evaluations() - base < opts.max_evaluations) {
    double moved = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
      const double before = y[t];
      y[t] = golden_section(f, y, t, before - kHalfWidth, before + kHalfWidth,
                            0.1 * opts.tol, best);
      moved = std::max(moved, std::abs(y[t] - before));
    }
    if (moved < opts.tol) {
      converged = true;
      break;
    }
  }
  return {y, best, f.evaluations() - base, converged};
}

bool lexicographically_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CompletionResult finish(const IncompletePcm& m, const IndexFunction& index,
                        const std::vector<double>& values, std::size_t evaluations,
                        CompletionMethod method, bool converged) {
  CompletionResult r;
  r.filled = m.fill(values);
  for (std::size_t t = 0; t < values.size(); ++t)
    r.values.push_back({m.missing()[t], values[t]});
  r.objective = index(r.filled);
  r.evaluations = evaluations + 1;
  r.method = method;
  r.converged = converged;
  return r;
}

void require_completable(const IncompletePcm& m) {
  if (m.missing().empty()) {
    throw Error(Errc::nothing_to_complete, "the matrix has no missing entries");
  }
  if (!m.is_connected()) {
    throw Error(Errc::disconnected,
                "known comparisons do not connect all alternatives; "
                "the completion is underdetermined");
  }
}

}  // namespace

std::vector<double> warm_start(const IncompletePcm& m) {
  const std::size_t n = m.order();
  auto known = [&](std::size_t i, std::size_t j) -> std::optional<double> {
    if (i == j) return std::nullopt;
    const Position p{std::min(i, j), std::max(i, j)};
    const auto it = m.known().find(p);
    if (it == m.known().end()) return std::nullopt;
    return i < j ? it->second : 1.0 / it->second;
  };
  std::vector<double> out;
  for (const auto& p : m.missing()) {
    double log_sum = 0.0;
    std::size_t paths = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto ik = known(p.i, k), kj = known(k, p.j);
      if (ik && kj) {
        log_sum += std::log(*ik * *kj);
        ++paths;
      }
    }
    out.push_back(paths ? std::exp(log_sum / static_cast<double>(paths)) : 1.0);
  }
  return out;
}

CompletionResult complete(const IncompletePcm& m, const IndexFunction& index,
                          const CompletionOptions& opts) {
  if (opts.method == CompletionMethod::grid_oracle) {
    return grid_oracle(m, index, {}, opts.exec);
  }
  require_completable(m);
  if (opts.starts == 0 || !(opts.tol > 0.0)) {
    throw Error(Errc::bad_parameter, "completion needs starts >= 1 and tol > 0");
  }
  const std::size_t dim = m.missing().size();
  std::vector<double> y0(dim);
  const auto initial = opts.initial.value_or(warm_start(m));
  if (initial.size() != dim) {
    throw Error(Errc::bad_parameter, "initial values must match the missing entries");
  }
  for (std::size_t t = 0; t < dim; ++t) {
    if (!(initial[t] > 0.0) || !std::isfinite(initial[t])) {
      throw Error(Errc::non_positive_entry, "initial values must be positive");
    }
    y0[t] = std::log(initial[t]);
  }

  const auto runs = kernels::map_indexed<LocalResult>(
      opts.starts,
      [&](std::size_t s) {
        auto y = y0;
        if (s > 0) {
          Rng rng(stream_seed(opts.seed, s));
          for (double& v : y) v += opts.start_spread * rng.normal();
        }
        LogObjective f(m, index);
        return opts.method == CompletionMethod::nelder_mead_log
                   ? nelder_mead(f, std::move(y), opts)
                   : coordinate_descent(f, std::move(y), opts);
      },
      opts.exec);

  std::size_t best = 0, total = 0;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    total += runs[s].evaluations;
    if (runs[s].value < runs[best].value ||
        (runs[s].value == runs[best].value &&
         lexicographically_less(runs[s].y, runs[best].y))) {
      best = s;
    }
  }
  // The starting point wins ties at noise level: for consistent data the
  // warm start is the exact path product.
  LogObjective f0(m, index);
  const double start_value = f0(y0);
  const auto& y = start_value <= runs[best].value + kObjectiveResolution * (1.0 + std::abs(runs[best].value))
                      ? y0
                      : runs[best].y;
  std::vector<double> values(dim);
  for (std::size_t t = 0; t < dim; ++t) values[t] = std::exp(y[t]);
  return finish(m, index, values, total + 1, opts.method, runs[best].converged);
}

CompletionResult grid_oracle(const IncompletePcm& m, const IndexFunction& index,
                             const OracleGrid& grid, Exec exec) {
  require_completable(m);
  const std::size_t dim = m.missing().size();
  if (dim > kMaxOracleMissing) {
    throw Error(Errc::too_many_missing,
                "grid oracle handles at most " + std::to_string(kMaxOracleMissing) +
                    " missing entries, got " + std::to_string(dim));
  }
  if (!(grid.lo > 0.0) || !(grid.hi >= grid.lo) || grid.resolution == 0) {
    throw Error(Errc::bad_parameter, "oracle grid needs 0 < lo <= hi, resolution >= 1");
  }

  auto axis = [](double lo, double hi, std::size_t points) {
    std::vector<double> ys;
    if (points == 1 || lo == hi) return std::vector<double>{lo};
    for (std::size_t t = 0; t < points; ++t)
      ys.push_back(lo + (hi - lo) * static_cast<double>(t) / static_cast<double>(points - 1));
    return ys;
  };

  const auto f = [&](std::span<const double> y) {
    std::vector<double> a(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) a[t] = std::exp(y[t]);
    return index(m.fill(a));
  };

  std::vector<std::vector<double>> axes(
      dim, axis(std::log(grid.lo), std::log(grid.hi), grid.resolution));
  std::vector<double> best_y(dim);
  double best_value = kInf;
  std::size_t evaluations = 0;

  for (std::size_t round = 0; round <= grid.refinements; ++round) {
    const auto values = kernels::evaluate_grid(axes, f, exec);
    evaluations += values.size();
    std::size_t arg = 0;
    for (std::size_t t = 1; t < values.size(); ++t)
      if (values[t] < values[arg]) arg = t;
    if (values[arg] < best_value) {
      best_value = values[arg];
      kernels::grid_point(axes, arg, best_y);
    }
    if (round == grid.refinements) break;

    // Zoom onto the cells adjacent to the best point.
    bool collapsed = true;
    for (std::size_t d = 0; d < dim; ++d) {
      const auto& ax = axes[d];
      if (ax.size() < 2) continue;
      collapsed = false;
      std::size_t k = 0;
      for (std::size_t t = 1; t < ax.size(); ++t)
        if (std::abs(ax[t] - best_y[d]) < std::abs(ax[k] - best_y[d])) k = t;
      const double lo = ax[k == 0 ? 0 : k - 1];
      const double hi = ax[std::min(k + 1, ax.size() - 1)];
      axes[d] = axis(lo, hi, grid.refine_resolution);
    }
    if (collapsed) break;
  }

  std::vector<double> values(dim);
  for (std::size_t t = 0; t < dim; ++t) values[t] = std::exp(best_y[t]);
  auto r = finish(m, index, values, evaluations, CompletionMethod::grid_oracle, true);
  return r;
}

}  // namespace pcmkit
