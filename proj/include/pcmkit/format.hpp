#pragma once

#include <string>

namespace pcmkit {

inline constexpr int kDefaultSignificantDigits = 12;

/// 12 significant digits ("%.12g"), or the shortest string that round-trips
/// to the same double when full_precision is set.
std::string format_real(double v, bool full_precision = false);

}  // namespace pcmkit
