#pragma once

// Plain-text matrix format:
//
//   4
//   1    2    ?    ?
//   1/2  1    1/3  1
//   ?    3    1    2
//   ?    1    1/2  1
//
// First line is the order n, then n rows of n whitespace-separated tokens.
// A token is a decimal number, a fraction "p/q", or "?" for a missing entry.
// Lines starting with '#' are ignored. Mirror positions must both be "?" or
// both numeric with product within 1e-6 of 1; the lower triangle is then
// rebuilt exactly from the upper one.

#include <iosfwd>
#include <string>
#include <variant>

#include "pcmkit/pcm.hpp"

namespace pcmkit {

using ParsedMatrix = std::variant<Pcm, IncompletePcm>;

inline constexpr double kReciprocityParseTol = 1e-6;

/// Throws Error(parse_error) or Error(non_positive_entry) with a 1-based
/// position in the message.
ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix_string(const std::string& text);
ParsedMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const Pcm& m, bool full_precision = false);
void write_matrix(std::ostream& out, const IncompletePcm& m,
                  bool full_precision = false);

}  // namespace pcmkit
