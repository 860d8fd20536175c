#include "pcmkit/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "pcmkit/error.hpp"
#include "pcmkit/format.hpp"

namespace pcmkit {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

[[noreturn]] void fail(const std::string& msg) {
  throw Error(Errc::parse_error, msg);
}

std::optional<double> parse_number(std::string_view tok) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{}) return std::nullopt;
  if (ptr == end) return v;
  if (*ptr != '/') return std::nullopt;
  double d = 0.0;
  auto [p2, ec2] = std::from_chars(ptr + 1, end, d);
  if (ec2 != std::errc{} || p2 != end) return std::nullopt;
  return v / d;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) fail("empty input: expected the order n");
  std::size_t n = 0;
  {
    std::istringstream hs(line);
    long long raw = 0;
    std::string extra;
    if (!(hs >> raw) || (hs >> extra)) fail("first line must be the order n");
    if (raw < 2) fail("order must be >= 2");
    n = static_cast<std::size_t>(raw);
  }

  // NaN marks a missing entry while scanning.
  std::vector<double> grid(n * n);
  const double missing = std::nan("");
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_content_line(in, line)) {
      fail("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    }
    std::istringstream rs(line);
    std::string tok;
    std::size_t j = 0;
    while (rs >> tok) {
      if (j >= n) fail("row " + std::to_string(i + 1) + " has more than " +
                       std::to_string(n) + " entries");
      if (tok == "?") {
        grid[i * n + j] = missing;
      } else {
        const auto v = parse_number(tok);
        if (!v) fail("cannot parse entry " + at(i, j) + ": '" + tok + "'");
        if (!std::isfinite(*v) || *v <= 0.0) {
          throw Error(Errc::non_positive_entry,
                      "entry " + at(i, j) + " must be positive, got '" + tok + "'");
        }
        grid[i * n + j] = *v;
      }
      ++j;
    }
    if (j != n) {
      fail("row " + std::to_string(i + 1) + " has " + std::to_string(j) +
           " entries, expected " + std::to_string(n));
    }
  }
  if (next_content_line(in, line)) fail("trailing content after the last row");

  std::map<Position, double> known;
  std::vector<Position> unknown;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = grid[i * n + i];
    if (std::isnan(d) || std::abs(d - 1.0) > kReciprocityParseTol) {
      fail("diagonal entry " + at(i, i) + " must be 1");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double up = grid[i * n + j], lo = grid[j * n + i];
      if (std::isnan(up) != std::isnan(lo)) {
        fail("entries " + at(i, j) + " and " + at(j, i) +
             " must both be '?' or both numeric");
      }
      if (std::isnan(up)) {
        unknown.push_back({i, j});
        continue;
      }
      if (std::abs(up * lo - 1.0) > kReciprocityParseTol) {
        fail("entries " + at(i, j) + " and " + at(j, i) + " are not reciprocal");
      }
      known[{i, j}] = up;
    }
  }

  if (unknown.empty()) {
    std::vector<UpperEntry> upper;
    for (const auto& [p, v] : known) upper.push_back({p, v});
    return Pcm::from_upper(upper);
  }
  return IncompletePcm(n, std::move(known), std::move(unknown));
}

ParsedMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

ParsedMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const Pcm& m, bool full_precision) {
  const std::size_t n = m.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j), full_precision);
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const IncompletePcm& m,
                  bool full_precision) {
  const std::size_t n = m.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      if (i == j) {
        out << '1';
        continue;
      }
      const Position p{std::min(i, j), std::max(i, j)};
      const auto it = m.known().find(p);
      if (it == m.known().end()) {
        out << '?';
      } else {
        out << format_real(i < j ? it->second : 1.0 / it->second, full_precision);
      }
    }
    out << '\n';
  }
}

}  // namespace pcmkit
