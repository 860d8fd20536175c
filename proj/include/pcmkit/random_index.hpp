#pragma once

// Random index RI(n): mean CI over random matrices whose upper-triangle
// entries are uniform on the 17-value Saaty scale. Values are simulated
// here, not quoted from literature.
//
// Table file: one line per order, "n  RI  sample_count  seed"; blank lines
// and lines starting with '#' are ignored.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "pcmkit/kernels.hpp"

namespace pcmkit {

inline constexpr std::size_t kDefaultRiSamples = 100'000;

struct RandomIndexEntry {
  std::size_t n = 0;
  double ri = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

class RandomIndexTable {
 public:
  void insert(const RandomIndexEntry& e) { entries_[e.n] = e; }

  /// Throws Error(order_out_of_table).
  double ri(std::size_t n) const;
  bool contains(std::size_t n) const { return entries_.contains(n); }
  std::size_t min_order() const;
  std::size_t max_order() const;
  const std::map<std::size_t, RandomIndexEntry>& entries() const {
    return entries_;
  }

  static RandomIndexTable parse(std::istream& in);
  static RandomIndexTable load(const std::string& path);
  void write(std::ostream& out) const;

 private:
  std::map<std::size_t, RandomIndexEntry> entries_;
};

/// Monte-Carlo estimate of RI(n). CIs are computed per sample (in parallel
/// when requested) and summed in sample order, so the result does not
/// depend on exec.
RandomIndexEntry simulate_random_index(std::size_t n, std::size_t samples,
                                       std::uint64_t seed,
                                       Exec exec = Exec::parallel);

}  // namespace pcmkit
