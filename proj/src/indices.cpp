#include "pcmkit/indices.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcmkit/error.hpp"
#include "pcmkit/random_index.hpp"

namespace pcmkit {

std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::ci: return "ci";
    case IndexKind::cr: return "cr";
    case IndexKind::k: return "k";
    case IndexKind::gci: return "gci";
    case IndexKind::re: return "re";
    case IndexKind::im: return "im";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::acceptable ? "acceptable" : "needs_revision";
}

IndexKind parse_index_kind(std::string_view name) {
  for (auto kind : {IndexKind::ci, IndexKind::cr, IndexKind::k, IndexKind::gci,
                    IndexKind::re, IndexKind::im}) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(Errc::unknown_name, "unknown index '" + std::string(name) + "'");
}

namespace {

// Rounding can push a zero index a hair below 0.
double clamp_rounding(double v, IndexKind kind) {
  if (v >= 0.0) return v;
  if (v > -1e-12) return 0.0;
  throw std::logic_error("index " + std::string(to_string(kind)) +
                         " evaluated to " + std::to_string(v));
}

IndexReport report(IndexKind kind, const Pcm& m, double value) {
  IndexReport r;
  r.index = kind;
  r.value = clamp_rounding(value, kind);
  r.n = m.order();
  return r;
}

IndexReport with_threshold(IndexReport r, double tau) {
  r.threshold = tau;
  r.verdict = r.value > tau ? Verdict::needs_revision : Verdict::acceptable;
  return r;
}

void require_triads(const Pcm& m, IndexKind kind) {
  if (m.order() < 3) {
    throw Error(Errc::order_too_small,
                "index " + std::string(to_string(kind)) + " needs order >= 3");
  }
}

struct LogResidual {
  double residual_sq = 0.0;  // sum over i<j of e_ij^2
  double total_sq = 0.0;     // sum over i<j of c_ij^2
};

LogResidual log_residual(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<double> c(n * n), r(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c[i * n + j] = std::log(m(i, j));
      r[i] += c[i * n + j];
    }
    r[i] /= static_cast<double>(n);
  }
  LogResidual out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cij = c[i * n + j];
      const double e = cij - (r[i] - r[j]);
      out.residual_sq += e * e;
      out.total_sq += cij * cij;
    }
  }
  return out;
}

}  // namespace

IndexReport ci(const Pcm& m, const PowerOptions& opts) {
  const auto eig = eigen_priority(m, opts);
  const double n = static_cast<double>(m.order());
  return report(IndexKind::ci, m, (eig.lambda_max - n) / (n - 1.0));
}

IndexReport cr(const Pcm& m, const RandomIndexTable& table,
               const PowerOptions& opts) {
  require_triads(m, IndexKind::cr);
  const double ri = table.ri(m.order());
  const double value = ci(m, opts).value / ri;
  return with_threshold(report(IndexKind::cr, m, value), kCrThreshold);
}

IndexReport k_index(const Pcm& m) {
  require_triads(m, IndexKind::k);
  return with_threshold(report(IndexKind::k, m, max_triad_phi(m)), kKThreshold);
}

IndexReport gci(const Pcm& m) {
  require_triads(m, IndexKind::gci);
  const double n = static_cast<double>(m.order());
  const double value = 2.0 / ((n - 1.0) * (n - 2.0)) * log_residual(m).residual_sq;
  return report(IndexKind::gci, m, value);
}

IndexReport re_index(const Pcm& m) {
  require_triads(m, IndexKind::re);
  const auto lr = log_residual(m);
  if (lr.total_sq == 0.0) {
    auto r = report(IndexKind::re, m, 0.0);
    r.degenerate = true;
    return r;
  }
  return report(IndexKind::re, m, lr.residual_sq / lr.total_sq);
}

IndexReport im_index(const Pcm& m, ImScale scale) {
  require_triads(m, IndexKind::im);
  const auto n = static_cast<Eigen::Index>(m.order());
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      a(m.row_major().data(), n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sigma = svd.singularValues();
  if (svd.info() != Eigen::Success || !sigma.allFinite()) {
    throw Error(Errc::svd_failure, "singular value decomposition failed");
  }
  // Singular values come sorted in decreasing order.
  const double tail = sigma.tail(n - 1).squaredNorm();
  double value = std::sqrt(tail);
  if (scale == ImScale::per_order) value /= static_cast<double>(n);
  return report(IndexKind::im, m, value);
}

IndexReport evaluate(IndexKind kind, const Pcm& m,
                     const RandomIndexTable* table) {
  switch (kind) {
    case IndexKind::ci: return ci(m);
    case IndexKind::cr:
      if (!table) throw Error(Errc::bad_parameter, "cr needs a random index table");
      return cr(m, *table);
    case IndexKind::k: return k_index(m);
    case IndexKind::gci: return gci(m);
    case IndexKind::re: return re_index(m);
    case IndexKind::im: return im_index(m);
  }
  throw Error(Errc::unknown_name, "unknown index");
}

IndexFunction index_function(IndexKind kind, const RandomIndexTable* table) {
  if (kind == IndexKind::cr && !table) {
    throw Error(Errc::bad_parameter, "cr needs a random index table");
  }
  return [kind, table](const Pcm& m) { return evaluate(kind, m, table).value; };
}

}  // namespace pcmkit
