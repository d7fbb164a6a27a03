#pragma once

// The endomorphism of the line given by T -> P(S): an element of
// A<|T| <= t>[S]/(P(S) - T) evaluated at a rational point two ways.

#include <vector>

#include "wst/points.hpp"
#include "wst/polynomial.hpp"
#include "wst/series.hpp"

namespace wst {

struct EndoContext {
  Polynomial P;  // leading coefficient invertible in the ring

  explicit EndoContext(Polynomial P);
  int degree() const { return P.degree(); }
  const BaseRing& ring() const { return P.ring(); }
};

/// sum_i coords[i](T) S^i with coords series in T.
struct EndoElement {
  std::vector<Series> coords;
};

struct PullbackValue {
  RingElement via_T;  // S := sigma, T := P(sigma) in the coordinates
  RingElement via_S;  // h as a polynomial in S alone, evaluated at sigma
  NormValue abs_P_sigma;
  NormValue abs_value;
  bool agree = false;
};

/// RadiusViolation when |P(sigma)| exceeds the outer radius of a coordinate.
PullbackValue pullback_eval(const EndoElement& h, const FiberPoint& z, const EndoContext& ctx);

/// Random element with coordinates of window `len` on |T| <= outer.
EndoElement random_endo_element(const EndoContext& ctx, long len, const Rational& outer, std::mt19937_64& rng);

}  // namespace wst
