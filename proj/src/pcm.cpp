#include "pcmkit/pcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "pcmkit/error.hpp"

namespace pcmkit {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_positive_entry: return "non_positive_entry";
    case Errc::incomplete_upper_triangle: return "incomplete_upper_triangle";
    case Errc::order_too_small: return "order_too_small";
    case Errc::unknown_name: return "unknown_name";
    case Errc::bad_parameter: return "bad_parameter";
    case Errc::parse_error: return "parse_error";
    case Errc::no_convergence: return "no_convergence";
    case Errc::order_out_of_table: return "order_out_of_table";
    case Errc::svd_failure: return "svd_failure";
    case Errc::disconnected: return "disconnected";
    case Errc::too_many_missing: return "too_many_missing";
    case Errc::nothing_to_complete: return "nothing_to_complete";
  }
  return "unknown";
}

namespace {

std::string pos_str(Position p) {
  return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
}

void check_value(Position p, double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw Error(Errc::non_positive_entry,
                "entry " + pos_str(p) + " must be positive and finite, got " +
                    std::to_string(v));
  }
}

}  // namespace

Pcm Pcm::from_upper(std::span<const UpperEntry> upper) {
  std::size_t n = 0;
  for (const auto& e : upper) n = std::max(n, e.pos.j + 1);
  if (n < 2) {
    throw Error(Errc::incomplete_upper_triangle,
                "a comparison matrix needs order >= 2");
  }

  std::vector<double> a(n * n, 1.0);
  std::vector<bool> seen(n * n, false);
  for (const auto& e : upper) {
    if (e.pos.i >= e.pos.j) {
      throw Error(Errc::incomplete_upper_triangle,
                  "position " + pos_str(e.pos) + " is not above the diagonal");
    }
    check_value(e.pos, e.value);
    const std::size_t idx = e.pos.i * n + e.pos.j;
    if (seen[idx]) {
      throw Error(Errc::incomplete_upper_triangle,
                  "position " + pos_str(e.pos) + " supplied twice");
    }
    seen[idx] = true;
    a[idx] = e.value;
    a[e.pos.j * n + e.pos.i] = 1.0 / e.value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[i * n + j]) {
        throw Error(Errc::incomplete_upper_triangle,
                    "position " + pos_str({i, j}) + " is missing");
      }
    }
  }
  return Pcm(n, std::move(a));
}

Pcm Pcm::from_upper_of(std::size_t n, std::span<const double> row_major) {
  if (n < 2) throw Error(Errc::order_too_small, "order must be >= 2");
  if (row_major.size() != n * n) {
    throw Error(Errc::bad_parameter, "grid size does not match order");
  }
  std::vector<double> a(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = row_major[i * n + j];
      check_value({i, j}, v);
      a[i * n + j] = v;
      a[j * n + i] = 1.0 / v;
    }
  }
  return Pcm(n, std::move(a));
}

Pcm Pcm::uniform(std::size_t n) {
  if (n < 2) throw Error(Errc::order_too_small, "order must be >= 2");
  return Pcm(n, std::vector<double>(n * n, 1.0));
}

Pcm Pcm::with_entry(std::size_t i, std::size_t j, double value) const {
  if (i == j || i >= n_ || j >= n_) {
    throw Error(Errc::bad_parameter, "with_entry needs an off-diagonal index");
  }
  check_value({std::min(i, j), std::max(i, j)}, value);
  Pcm out = *this;
  out.a_[i * n_ + j] = value;
  out.a_[j * n_ + i] = 1.0 / value;
  return out;
}

Pcm Pcm::transposed() const {
  std::vector<double> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = a_[i * n_ + j];
  return Pcm(n_, std::move(t));
}

Pcm Pcm::permuted(std::span<const std::size_t> p) const {
  if (p.size() != n_) throw Error(Errc::bad_parameter, "permutation size");
  std::vector<double> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[p[i] * n_ + p[j]] = a_[i * n_ + j];
  return Pcm(n_, std::move(t));
}

Pcm make_pcm(std::span<const UpperEntry> upper) {
  return Pcm::from_upper(upper);
}

IncompletePcm::IncompletePcm(std::size_t n, std::map<Position, double> known,
                             std::vector<Position> missing)
    : n_(n), known_(std::move(known)), missing_(std::move(missing)) {
  if (n_ < 2) throw Error(Errc::order_too_small, "order must be >= 2");
  std::sort(missing_.begin(), missing_.end());
  std::set<Position> all;
  for (const auto& [p, v] : known_) {
    if (p.i >= p.j || p.j >= n_) {
      throw Error(Errc::incomplete_upper_triangle,
                  "known position " + pos_str(p) + " outside upper triangle");
    }
    check_value(p, v);
    all.insert(p);
  }
  for (const auto& p : missing_) {
    if (p.i >= p.j || p.j >= n_) {
      throw Error(Errc::incomplete_upper_triangle,
                  "missing position " + pos_str(p) + " outside upper triangle");
    }
    if (!all.insert(p).second) {
      throw Error(Errc::incomplete_upper_triangle,
                  "position " + pos_str(p) + " listed twice");
    }
  }
  if (all.size() != n_ * (n_ - 1) / 2) {
    throw Error(Errc::incomplete_upper_triangle,
                "known and missing entries do not cover the upper triangle");
  }
}

bool IncompletePcm::is_connected() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const auto& [p, v] : known_) {
    const auto a = find(p.i), b = find(p.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Pcm IncompletePcm::fill(std::span<const double> values) const {
  if (values.size() != missing_.size()) {
    throw Error(Errc::bad_parameter, "fill needs one value per missing entry");
  }
  std::vector<UpperEntry> upper;
  upper.reserve(n_ * (n_ - 1) / 2);
  for (const auto& [p, v] : known_) upper.push_back({p, v});
  for (std::size_t t = 0; t < missing_.size(); ++t)
    upper.push_back({missing_[t], values[t]});
  return Pcm::from_upper(upper);
}

IncompletePcm IncompletePcm::permuted(std::span<const std::size_t> p) const {
  if (p.size() != n_) throw Error(Errc::bad_parameter, "permutation size");
  std::map<Position, double> known;
  for (const auto& [pos, v] : known_) {
    const std::size_t a = p[pos.i], b = p[pos.j];
    if (a < b)
      known[{a, b}] = v;
    else
      known[{b, a}] = 1.0 / v;
  }
  std::vector<Position> missing;
  for (const auto& pos : missing_) {
    const std::size_t a = p[pos.i], b = p[pos.j];
    missing.push_back({std::min(a, b), std::max(a, b)});
  }
  return IncompletePcm(n_, std::move(known), std::move(missing));
}

double local_inconsistency(double a_ij, double a_jk, double a_ik) noexcept {
  const double path = a_ij * a_jk;
  return std::min(std::abs(1.0 - a_ik / path), std::abs(1.0 - path / a_ik));
}

std::size_t triad_count(std::size_t n) noexcept {
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

std::vector<Triad> triads(const Pcm& m) {
  const std::size_t n = m.order();
  if (n < 3) throw Error(Errc::order_too_small, "triads need order >= 3");
  std::vector<Triad> out;
  out.reserve(triad_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ij = m(i, j), jk = m(j, k), ik = m(i, k);
        out.push_back({i, j, k, ij, jk, ik, local_inconsistency(ij, jk, ik)});
      }
  return out;
}

double max_triad_phi(const Pcm& m) noexcept {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        worst = std::max(worst, local_inconsistency(m(i, j), m(j, k), m(i, k)));
  return worst;
}

bool is_consistent(const Pcm& m, double tol) {
  return max_triad_phi(m) <= tol;
}

double inconsistent_triad_ratio(const Pcm& m, double tol) {
  const std::size_t n = m.order();
  if (n < 3) throw Error(Errc::order_too_small, "triads need order >= 3");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (local_inconsistency(m(i, j), m(j, k), m(i, k)) > tol) ++bad;
  return static_cast<double>(bad) / static_cast<double>(triad_count(n));
}

}  // namespace pcmkit
