#pragma once

#include <stdexcept>
#include <string>

namespace critline {

// Every failure mode the library can report.  The CLI maps these onto its
// exit-status taxonomy (config / numeric / io).
enum class errc {
  domain_error,        // argument outside a documented precondition
  pole,                // evaluation at s = 1
  unresolved,          // scan grid could not separate adjacent zeros
  noninteger,          // counting formula did not land near an integer
  step_fail,           // argument tracking step refinement exhausted
  no_convergence,      // delta ladder failed to stabilize
  oscillation,         // Newton cycled and bisection fallback also failed
  multiple_candidates, // cross-validation window held != 1 scan zero
  count_mismatch,      // scan count disagrees with counting formula
  cutoff_exceeded,     // prime cutoff above the configured cap
  malformed_line,      // ingestion parse failure
  non_monotone,        // ingested ordinates out of order
  gap_in_indices,      // summary stream skipped an index
  nonpositive_norm,    // gap normalization not positive at these ordinates
  io_error,
  config_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::domain_error: return "DOMAIN_ERROR";
    case errc::pole: return "POLE";
    case errc::unresolved: return "UNRESOLVED";
    case errc::noninteger: return "NONINTEGER";
    case errc::step_fail: return "STEP_FAIL";
    case errc::no_convergence: return "NO_CONVERGENCE";
    case errc::oscillation: return "OSCILLATION";
    case errc::multiple_candidates: return "MULTIPLE_CANDIDATES";
    case errc::count_mismatch: return "COUNT_MISMATCH";
    case errc::cutoff_exceeded: return "CUTOFF_EXCEEDED";
    case errc::malformed_line: return "MALFORMED_LINE";
    case errc::non_monotone: return "NON_MONOTONE";
    case errc::gap_in_indices: return "GAP_IN_INDICES";
    case errc::nonpositive_norm: return "NONPOSITIVE_NORM";
    case errc::io_error: return "IO_ERROR";
    case errc::config_error: return "CONFIG_ERROR";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace critline
