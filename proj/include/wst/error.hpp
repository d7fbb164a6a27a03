#pragma once

#include <stdexcept>
#include <string>

namespace wst {

enum class Errc {
  invalid_argument,
  malformed_element,
  not_invertible,
  precision_exhausted,
  incompatible_norm_kind,
  empty_radius_intersection,
  bad_bracket,
  zero_series,
  tail_obstruction,
  radius_too_small,
  unsupported_point,
  unsupported_archimedean,
  fiber_zero,
  not_contracting,
  max_iterations,
  not_a_unit,
  not_unit,
  no_progress,
  not_squarefree_residue_support,
  radius_violation,
  overflow,
};

const char* errc_name(Errc code);

/// Input errors are malformed data or unsupported requests; everything else
/// is a checked mathematical failure.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace wst
