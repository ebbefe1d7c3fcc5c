#pragma once

#include <stdexcept>
#include <string>

namespace oosmds {

/// Failure classes surfaced by the library. The CLI maps these onto its
/// exit codes (input = 2, spectrum = 3, solver = 4).
enum class errc {
  non_square,
  asymmetric_beyond_tolerance,
  negative_entry,
  nonzero_diagonal,
  similarity_bound_violation,
  dimension_mismatch,
  parse_error,
  convergence_failure,
  insufficient_positive_spectrum,
  zero_singular_value,
  rank_deficient_configuration,
  near_singular,
  bracketing_failure,
  non_finite_objective,
  dimension_too_large,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

const char* errc_name(errc code) noexcept;

} // namespace oosmds
