#include "pcmkit/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pcmkit/builtin.hpp"
#include "pcmkit/error.hpp"
#include "pcmkit/format.hpp"
#include "pcmkit/random_index.hpp"

namespace pcmkit {

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s + 1;
    while (e < order.size() && v[order[e]] == v[order[s]]) ++e;
    const double mean_rank = 0.5 * static_cast<double>(s + 1 + e);
    for (std::size_t t = s; t < e; ++t) r[order[t]] = mean_rank;
    s = e;
  }
  return r;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw Error(Errc::bad_parameter, "pearson needs two equal series of length >= 2");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    sxy += (x[t] - mx) * (y[t] - my);
    sxx += (x[t] - mx) * (x[t] - mx);
    syy += (y[t] - my) * (y[t] - my);
  }
  // Constant series: identical inputs correlate perfectly, otherwise 0.
  if (sxx == 0.0 || syy == 0.0) return sxx == syy ? 1.0 : 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  const auto rx = ranks(x), ry = ranks(y);
  return pearson(rx, ry);
}

ScatterStudy scatter_study(const GeneratorSpec& spec, std::size_t count,
                           IndexKind index_x, IndexKind index_y, Exec exec,
                           const RandomIndexTable* table) {
  if (count == 0) throw Error(Errc::bad_parameter, "scatter study needs count >= 1");
  const auto fx = index_function(index_x, table);
  const auto fy = index_function(index_y, table);

  const auto pairs = kernels::map_indexed<std::pair<double, double>>(
      count,
      [&](std::size_t t) {
        const Pcm m = generate_one(spec, t);
        return std::pair{fx(m), fy(m)};
      },
      exec);

  ScatterStudy study;
  study.spec = spec;
  study.index_x = index_x;
  study.index_y = index_y;
  std::vector<double> xs(count), ys(count);
  for (std::size_t t = 0; t < count; ++t) {
    xs[t] = pairs[t].first;
    ys[t] = pairs[t].second;
    if (!std::isfinite(xs[t]) || !std::isfinite(ys[t])) {
      throw Error(Errc::no_convergence, "non-finite index value for matrix " + std::to_string(t));
    }
    study.rows.push_back({t, xs[t], ys[t]});
  }

  if (count >= 2) {
    study.summary.pearson = pearson(xs, ys);
    study.summary.spearman = spearman(xs, ys);
    const auto rx = ranks(xs), ry = ranks(ys);
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(rx[a] - ry[a]) > std::abs(rx[b] - ry[b]);
    });
    study.summary.discordant.assign(order.begin(), order.begin() + std::min<std::size_t>(2, count));
  } else {
    study.summary.pearson = study.summary.spearman = 1.0;
    study.summary.discordant = {0};
  }
  return study;
}

ScanResult quasiconvexity_scan(const Pcm& base, Position entry,
                               const IndexFunction& index, const ScanGrid& grid,
                               Exec exec) {
  if (base.order() != 3 || entry.i >= entry.j || entry.j > 2) {
    throw Error(Errc::bad_parameter, "scan needs a 3x3 matrix and an upper entry");
  }
  const std::size_t mid = 3 - entry.i - entry.j;
  const double target = base(entry.i, mid) * base(mid, entry.j);
  const auto xs = log_grid(grid);
  const auto values = kernels::map_indexed<double>(
      xs.size(),
      [&](std::size_t t) { return index(base.with_entry(entry.i, entry.j, xs[t])); },
      exec);

  ScanResult r;
  for (std::size_t t = 0; t < xs.size(); ++t) r.points.emplace_back(xs[t], values[t]);
  const auto u = analyze_unimodal(values);
  r.unimodal = u.unimodal;
  r.argmin = u.argmin;
  r.argmin_x = xs[u.argmin];
  r.min_value = values[u.argmin];
  r.consistent_x = target;
  const double step = xs.size() > 1 ? std::log(grid.hi / grid.lo) /
                                          static_cast<double>(xs.size() - 1)
                                    : 0.0;
  r.argmin_at_consistent =
      std::abs(std::log(r.argmin_x / target)) <= step * (1.0 + 1e-9) ||
      (xs.size() == 1 && r.argmin_x == target);

  auto at = [&](double log_x) {
    return index(base.with_entry(entry.i, entry.j, std::exp(log_x)));
  };
  double lo = std::log(xs[u.argmin == 0 ? 0 : u.argmin - 1]);
  double hi = std::log(xs[std::min(u.argmin + 1, xs.size() - 1)]);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double fc = at(c), fd = at(d);
  while (hi - lo > 1e-12) {
    if (fc < fd) {
      hi = d, d = c, fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = at(c);
    } else {
      lo = c, c = d, fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = at(d);
    }
  }
  r.refined_x = std::exp(fc < fd ? c : d);
  r.refined_value = std::min({fc, fd, r.min_value});
  if (r.refined_value == r.min_value) r.refined_x = r.argmin_x;
  return r;
}

AsymptoticStudy asymptotic_study(double x, std::size_t n_lo, std::size_t n_hi,
                                 const RandomIndexTable* table, Exec exec) {
  if (!(x > 0.0) || n_lo < 3 || n_hi < n_lo || n_hi > kMaxAsymptoticOrder) {
    throw Error(Errc::bad_parameter,
                "asymptotic study needs x > 0 and 3 <= n_lo <= n_hi <= 200");
  }
  AsymptoticStudy s;
  s.x = x;
  s.rows = kernels::map_indexed<AsymptoticRow>(
      n_hi - n_lo + 1,
      [&](std::size_t t) {
        const std::size_t n = n_lo + t;
        const Pcm m = builtin::a_ks(n, x);
        AsymptoticRow row;
        row.n = n;
        row.ci = ci(m).value;
        row.k = k_index(m).value;
        if (table && table->contains(n)) row.cr = row.ci / table->ri(n);
        return row;
      },
      exec);

  s.ci_strictly_decreasing = true;
  s.k_constant = true;
  for (std::size_t t = 0; t < s.rows.size(); ++t) {
    if (t > 0 && !(s.rows[t].ci < s.rows[t - 1].ci)) s.ci_strictly_decreasing = false;
    if (std::abs(s.rows[t].k - s.rows[0].k) > 1e-12) s.k_constant = false;
    if (!s.cr_acceptable_from && s.rows[t].cr && *s.rows[t].cr < kCrThreshold)
      s.cr_acceptable_from = s.rows[t].n;
  }
  return s;
}

namespace {

std::string num(double v) { return format_real(v); }

std::string triad_count_str(const Pcm& m) {
  const auto ratio = inconsistent_triad_ratio(m);
  const auto total = triad_count(m.order());
  const auto bad = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(total)));
  return std::to_string(bad) + "/" + std::to_string(total);
}

}  // namespace

std::vector<SuiteCheck> counterexample_suite() {
  std::vector<SuiteCheck> out;

  const Pcm a1 = builtin::a1(), a2 = builtin::a2();
  const double k1 = k_index(a1).value, k2 = k_index(a2).value;
  out.push_back({"k_a1_greater_than_k_a2", "K(A1) > K(A2)",
                 "K(A1)=" + num(k1) + " K(A2)=" + num(k2), k1 > k2});
  out.push_back({"a1_inconsistent_triads", "3/10", triad_count_str(a1),
                 triad_count_str(a1) == "3/10"});
  out.push_back({"a2_inconsistent_triads", "10/10", triad_count_str(a2),
                 triad_count_str(a2) == "10/10"});

  for (std::size_t n : {5, 8, 12}) {
    for (double alpha : {2.0, 3.0}) {
      const Pcm a4 = builtin::a4(n, alpha);
      const double k4 = k_index(a4).value;
      for (double eps : {0.25, 1.0}) {
        const double k3 = k_index(builtin::a3(n, alpha, eps)).value;
        out.push_back({"k_a3_greater_than_k_a4(n=" + std::to_string(n) +
                           ",alpha=" + num(alpha) + ",eps=" + num(eps) + ")",
                       "K(A3) > K(A4)", "K(A3)=" + num(k3) + " K(A4)=" + num(k4),
                       k3 > k4});
      }
      const auto total = triad_count(n);
      out.push_back({"a4_all_triads_inconsistent(n=" + std::to_string(n) +
                         ",alpha=" + num(alpha) + ")",
                     std::to_string(total) + "/" + std::to_string(total),
                     triad_count_str(a4), inconsistent_triad_ratio(a4) == 1.0});
    }
    const double ratio = inconsistent_triad_ratio(builtin::a3(n, 2.0, 0.5));
    const double law = 6.0 / static_cast<double>((n - 1) * n);
    out.push_back({"a3_triad_ratio(n=" + std::to_string(n) + ")",
                   "6/((n-1)n)=" + num(law), num(ratio),
                   std::abs(ratio - law) <= 1e-12});
  }

  // Raising a_15 from 7 to 7.5 worsens (a12, a25, a15) but improves the
  // other two triads through a_15, and the matrix as a whole.
  const Pcm before = builtin::perturbation5();
  const Pcm after = before.with_entry(0, 4, 7.5);
  struct Path {
    std::size_t j;
    const char* name;
    bool should_increase;
  };
  for (const Path& p : {Path{1, "phi(a12,a25,a15)", true},
                        Path{2, "phi(a13,a35,a15)", false},
                        Path{3, "phi(a14,a45,a15)", false}}) {
    const double b = local_inconsistency(before(0, p.j), before(p.j, 4), before(0, 4));
    const double a = local_inconsistency(after(0, p.j), after(p.j, 4), after(0, 4));
    out.push_back({std::string("perturbation_") + p.name,
                   p.should_increase ? "increases" : "decreases",
                   num(b) + " -> " + num(a), p.should_increase ? a > b : a < b});
  }
  const double ci_b = ci(before).value, ci_a = ci(after).value;
  out.push_back({"perturbation_ci", "decreases", num(ci_b) + " -> " + num(ci_a),
                 ci_a < ci_b});

  return out;
}

}  // namespace pcmkit
