#include "pcmkit/csv.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <string>

#include "pcmkit/format.hpp"

namespace pcmkit {

std::string format_real(double v, bool full_precision) {
  if (full_precision) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
  }
  std::array<char, 32> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.*g",
                                kDefaultSignificantDigits, v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_scatter_csv(std::ostream& out, const ScatterStudy& study,
                       bool full_precision) {
  out << "# index_x=" << to_string(study.index_x)
      << " index_y=" << to_string(study.index_y)
      << " generator=" << to_string(study.spec.kind) << " n=" << study.spec.n
      << " count=" << study.rows.size() << " seed=" << study.spec.seed
      << " im_normalization=divided_by_n\n";
  out << "matrix_id,index_x,index_y\n";
  for (const auto& r : study.rows) {
    out << r.matrix_id << ',' << format_real(r.x, full_precision) << ','
        << format_real(r.y, full_precision) << '\n';
  }
}

void write_scan_csv(std::ostream& out, const ScanResult& scan,
                    bool full_precision) {
  out << "x,value\n";
  for (const auto& [x, v] : scan.points) {
    out << format_real(x, full_precision) << ',' << format_real(v, full_precision)
        << '\n';
  }
}

void write_asymptotic_csv(std::ostream& out, const AsymptoticStudy& study,
                          bool full_precision) {
  out << "n,ci,cr,k\n";
  for (const auto& r : study.rows) {
    out << r.n << ',' << format_real(r.ci, full_precision) << ','
        << (r.cr ? format_real(*r.cr, full_precision) : std::string()) << ','
        << format_real(r.k, full_precision) << '\n';
  }
}

void write_suite_csv(std::ostream& out, std::span<const SuiteCheck> checks) {
  out << "check,expected,observed,pass\n";
  for (const auto& c : checks) {
    out << field(c.check) << ',' << field(c.expected) << ','
        << field(c.observed) << ',' << (c.pass ? "true" : "false") << '\n';
  }
}

}  // namespace pcmkit
