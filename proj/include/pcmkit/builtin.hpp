#pragma once

// Catalog of the worked example matrices used by the studies and tests.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcmkit/pcm.hpp"

namespace pcmkit::builtin {

/// Order-5 matrix whose entry a_15 = 7 sits in the triads (2,3,7), (2,4,7)
/// and (4,2,7).
Pcm perturbation5();

/// Order-4 matrix with a_13 and a_14 unknown.
IncompletePcm incomplete4();

/// [[1, 3, x], [1/3, 1, 1/2], [1/x, 2, 1]]; consistent at x = 1.5.
Pcm frame3(double x);

/// All-ones order-n matrix except a_1n = x, a_n1 = 1/x.
Pcm a_ks(std::size_t n, double x);

/// a_ks(5, 2.001).
Pcm a1();

/// a4(5, 2).
Pcm a2();

/// a_ks(n, alpha + eps).
Pcm a3(std::size_t n, double alpha, double eps);

/// a_ij = alpha whenever j - i is a positive even number, 1 elsewhere above
/// the diagonal. Matches the displayed 5x5 prefix and makes every triad
/// inconsistent for alpha != 1: a_ij a_jk / a_ik is alpha or 1/alpha for every
/// i < j < k.
Pcm a4(std::size_t n, double alpha);

using Matrix = std::variant<Pcm, IncompletePcm>;

/// Parses expressions such as "A1", "A_KS(10,2)" or "A3(8, 2, 0.25)".
/// Throws Error(unknown_name) or Error(bad_parameter).
Matrix by_name(std::string_view expr);

/// Call signatures accepted by by_name, for help output.
std::vector<std::string> signatures();

}  // namespace pcmkit::builtin
