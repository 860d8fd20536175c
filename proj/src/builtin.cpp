#include "pcmkit/builtin.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "pcmkit/error.hpp"

namespace pcmkit::builtin {

namespace {

void require_order(std::size_t n) {
  if (n < 3) throw Error(Errc::bad_parameter, "order must be >= 3");
}

void require_positive(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw Error(Errc::bad_parameter, std::string(what) + " must be positive");
  }
}

Pcm upper_grid(std::size_t n, auto&& entry) {
  std::vector<double> grid(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) grid[i * n + j] = entry(i, j);
  return Pcm::from_upper_of(n, grid);
}

}  // namespace

Pcm perturbation5() {
  const UpperEntry upper[] = {
      {{0, 1}, 2.0}, {{0, 2}, 2.0}, {{0, 3}, 4.0}, {{0, 4}, 7.0},
      {{1, 2}, 4.0}, {{1, 3}, 1.0}, {{1, 4}, 3.0},
      {{2, 3}, 1.0}, {{2, 4}, 4.0},
      {{3, 4}, 2.0},
  };
  return make_pcm(upper);
}

IncompletePcm incomplete4() {
  std::map<Position, double> known{
      {{0, 1}, 2.0}, {{1, 2}, 1.0 / 3.0}, {{1, 3}, 1.0}, {{2, 3}, 2.0}};
  return IncompletePcm(4, std::move(known), {{0, 2}, {0, 3}});
}

Pcm frame3(double x) {
  require_positive(x, "x");
  const UpperEntry upper[] = {{{0, 1}, 3.0}, {{0, 2}, x}, {{1, 2}, 0.5}};
  return make_pcm(upper);
}

Pcm a_ks(std::size_t n, double x) {
  require_order(n);
  require_positive(x, "x");
  return upper_grid(n, [&](std::size_t i, std::size_t j) {
    return i == 0 && j == n - 1 ? x : 1.0;
  });
}

Pcm a1() { return a_ks(5, 2.001); }

Pcm a2() { return a4(5, 2.0); }

Pcm a3(std::size_t n, double alpha, double eps) {
  require_positive(alpha + eps, "alpha + eps");
  return a_ks(n, alpha + eps);
}

Pcm a4(std::size_t n, double alpha) {
  require_order(n);
  require_positive(alpha, "alpha");
  return upper_grid(n, [&](std::size_t i, std::size_t j) {
    return (j - i) % 2 == 0 ? alpha : 1.0;
  });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<double> parse_args(std::string_view body) {
  std::vector<double> args;
  if (trim(body).empty()) return args;
  while (true) {
    const auto comma = body.find(',');
    const auto tok = trim(body.substr(0, comma));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::bad_parameter,
                  "cannot parse argument '" + std::string(tok) + "'");
    }
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return args;
}

std::size_t as_order(double v) {
  if (v < 3 || v != std::floor(v) || v > 1e6) {
    throw Error(Errc::bad_parameter, "order must be an integer >= 3");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

Matrix by_name(std::string_view expr) {
  expr = trim(expr);
  std::string_view name = expr;
  std::vector<double> args;
  if (const auto open = expr.find('('); open != std::string_view::npos) {
    if (expr.back() != ')') {
      throw Error(Errc::bad_parameter, "missing ')' in '" + std::string(expr) + "'");
    }
    name = trim(expr.substr(0, open));
    args = parse_args(expr.substr(open + 1, expr.size() - open - 2));
  }

  auto arity = [&](std::size_t k) {
    if (args.size() != k) {
      throw Error(Errc::bad_parameter, std::string(name) + " takes " +
                                           std::to_string(k) + " argument(s)");
    }
  };

  if (name == "perturbation5") { arity(0); return perturbation5(); }
  if (name == "incomplete4") { arity(0); return incomplete4(); }
  if (name == "frame3") { arity(1); return frame3(args[0]); }
  if (name == "A_KS") { arity(2); return a_ks(as_order(args[0]), args[1]); }
  if (name == "A1") { arity(0); return a1(); }
  if (name == "A2") { arity(0); return a2(); }
  if (name == "A3") {
    arity(3);
    return a3(as_order(args[0]), args[1], args[2]);
  }
  if (name == "A4") { arity(2); return a4(as_order(args[0]), args[1]); }
  throw Error(Errc::unknown_name, "unknown builtin matrix '" + std::string(name) + "'");
}

std::vector<std::string> signatures() {
  return {"perturbation5", "incomplete4",  "frame3(x)",          "A_KS(n,x)",
          "A1",            "A2",           "A3(n,alpha,eps)",    "A4(n,alpha)"};
}

}  // namespace pcmkit::builtin
