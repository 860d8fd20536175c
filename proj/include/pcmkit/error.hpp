#pragma once

#include <stdexcept>
#include <string>

namespace pcmkit {

enum class Errc {
  non_positive_entry,
  incomplete_upper_triangle,
  order_too_small,
  unknown_name,
  bad_parameter,
  parse_error,
  no_convergence,
  order_out_of_table,
  svd_failure,
  disconnected,
  too_many_missing,
  nothing_to_complete,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double residual, long iterations)
      : Error(Errc::no_convergence, what),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

}  // namespace pcmkit
