#include "pcmkit/random_index.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pcmkit/error.hpp"
#include "pcmkit/format.hpp"
#include "pcmkit/generator.hpp"
#include "pcmkit/indices.hpp"

namespace pcmkit {

double RandomIndexTable::ri(std::size_t n) const {
  const auto it = entries_.find(n);
  if (it == entries_.end()) {
    throw Error(Errc::order_out_of_table,
                "order " + std::to_string(n) + " is not in the random index table");
  }
  return it->second.ri;
}

std::size_t RandomIndexTable::min_order() const {
  return entries_.empty() ? 0 : entries_.begin()->first;
}

std::size_t RandomIndexTable::max_order() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

RandomIndexTable RandomIndexTable::parse(std::istream& in) {
  RandomIndexTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    RandomIndexEntry e;
    std::string extra;
    if (!(ls >> e.n >> e.ri >> e.samples >> e.seed) || (ls >> extra) ||
        e.n < 3 || !(e.ri > 0.0)) {
      throw Error(Errc::parse_error,
                  "random index table line " + std::to_string(lineno) +
                      ": expected 'n RI sample_count seed'");
    }
    table.insert(e);
  }
  return table;
}

RandomIndexTable RandomIndexTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  return parse(in);
}

void RandomIndexTable::write(std::ostream& out) const {
  out << "# n  RI  sample_count  seed\n";
  for (const auto& [n, e] : entries_) {
    out << e.n << "  " << format_real(e.ri) << "  " << e.samples << "  "
        << e.seed << '\n';
  }
}

RandomIndexEntry simulate_random_index(std::size_t n, std::size_t samples,
                                       std::uint64_t seed, Exec exec) {
  if (n < 3 || samples == 0) {
    throw Error(Errc::bad_parameter, "random index needs n >= 3 and samples >= 1");
  }
  const GeneratorSpec spec{GeneratorKind::saaty_uniform, n, seed};
  const auto cis = kernels::score_generated(
      samples, [&](std::size_t t) { return generate_one(spec, t); },
      [](const Pcm& m) { return ci(m).value; }, exec);
  double sum = 0.0;
  for (double v : cis) sum += v;
  return {n, sum / static_cast<double>(samples), samples, seed};
}

}  // namespace pcmkit
