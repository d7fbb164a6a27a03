#include "wst/error.hpp"

namespace wst {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::malformed_element: return "MalformedElement";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::precision_exhausted: return "PrecisionExhausted";
    case Errc::incompatible_norm_kind: return "IncompatibleNormKind";
    case Errc::empty_radius_intersection: return "EmptyRadiusIntersection";
    case Errc::bad_bracket: return "BadBracket";
    case Errc::zero_series: return "ZeroSeries";
    case Errc::tail_obstruction: return "TailObstruction";
    case Errc::radius_too_small: return "RadiusTooSmall";
    case Errc::unsupported_point: return "UnsupportedPoint";
    case Errc::unsupported_archimedean: return "UnsupportedArchimedean";
    case Errc::fiber_zero: return "FiberZero";
    case Errc::not_contracting: return "NotContracting";
    case Errc::max_iterations: return "MaxIterations";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_unit: return "NotUnit";
    case Errc::no_progress: return "NoProgress";
    case Errc::not_squarefree_residue_support: return "NotSquarefreeResidueSupport";
    case Errc::radius_violation: return "RadiusViolation";
    case Errc::overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::malformed_element:
    case Errc::incompatible_norm_kind:
    case Errc::empty_radius_intersection:
    case Errc::unsupported_point:
    case Errc::unsupported_archimedean:
    case Errc::bad_bracket:
      return true;
    default:
      return false;
  }
}

}  // namespace wst
