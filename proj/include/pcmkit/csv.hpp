#pragma once

// CSV writers for the studies. Every file starts with its header row; the
// scatter file is preceded by one '#' metadata line naming the generator
// and the IM normalization. Reals use 12 significant digits unless
// full_precision is set.

#include <iosfwd>
#include <span>

#include "pcmkit/ensemble.hpp"

namespace pcmkit {

void write_scatter_csv(std::ostream& out, const ScatterStudy& study,
                       bool full_precision = false);
void write_scan_csv(std::ostream& out, const ScanResult& scan,
                    bool full_precision = false);
void write_asymptotic_csv(std::ostream& out, const AsymptoticStudy& study,
                          bool full_precision = false);
void write_suite_csv(std::ostream& out, std::span<const SuiteCheck> checks);

}  // namespace pcmkit
