#include "wst/endo_checks.hpp"

#include "wst/error.hpp"

namespace wst {

EndoContext::EndoContext(Polynomial p) : P(std::move(p)) {
  require(P.degree() >= 1, Errc::invalid_argument, "P must have degree >= 1");
  const BaseRing& R = P.ring();
  const RingElement lc = P.leading();
  const bool unit = R.is_field() ? !R.is_zero(lc) : R.norm(lc) == NormValue::one() && R.kind() != RingKind::integer_arch;
  const bool int_unit = R.kind() == RingKind::integer_arch && (R.is_one(lc) || R.is_one(R.neg(lc)));
  require(unit || int_unit, Errc::not_a_unit, "leading coefficient of P is not invertible");
}

PullbackValue pullback_eval(const EndoElement& h, const FiberPoint& z, const EndoContext& ctx) {
  require(z.kind == FiberPoint::Kind::rational, Errc::unsupported_point, "pullback evaluation needs a rational point");
  require(static_cast<int>(h.coords.size()) == ctx.degree(), Errc::malformed_element, "wrong number of coordinates");
  const BaseRing& R = ctx.ring();
  const RingElement sigma = z.center;
  R.check(sigma);
  PullbackValue out;
  const RingElement t = ctx.P.eval(sigma);
  out.abs_P_sigma = R.norm_bound(t);
  for (const auto& c : h.coords) {
    require(c.ring() == R, Errc::malformed_element, "coordinate over another ring");
    require(c.lo() >= 0, Errc::malformed_element, "coordinates must be power series in T");
    require(out.abs_P_sigma <= NormValue::of(c.outer()), Errc::radius_violation,
            "|P(sigma)| = " + out.abs_P_sigma.str() + " exceeds the series radius " + to_string(c.outer()));
  }
  // (a) substitute T := P(sigma), S := sigma.
  RingElement acc = R.zero();
  RingElement sp = R.one();
  for (const auto& c : h.coords) {
    acc = R.add(acc, R.mul(c.eval(t), sp));
    sp = R.mul(sp, sigma);
  }
  out.via_T = acc;
  // (b) expand every coordinate through T = P(S), then evaluate in S.
  Polynomial H(R);
  Polynomial Si = Polynomial::constant(R, R.one());
  for (const auto& c : h.coords) {
    H = H + c.to_polynomial().compose(ctx.P) * Si;
    Si = Si * Polynomial::x(R);
  }
  out.via_S = H.eval(sigma);
  const RingElement diff = R.sub(out.via_T, out.via_S);
  if (const auto* d = std::get_if<PAdic>(&diff)) {
    out.agree = d->is_zero_like();
  } else if (const auto* d = std::get_if<Complex>(&diff)) {
    out.agree = std::abs(*d) <= 1e-12 * (1.0 + std::abs(std::get<Complex>(out.via_T)));
  } else {
    out.agree = R.is_zero(diff);
  }
  out.abs_value = R.norm_bound(out.via_T);
  return out;
}

EndoElement random_endo_element(const EndoContext& ctx, long len, const Rational& outer, std::mt19937_64& rng) {
  EndoElement h;
  for (int i = 0; i < ctx.degree(); ++i) {
    std::vector<RingElement> c;
    for (long j = 0; j < len; ++j) c.push_back(random_element(ctx.ring(), rng, 9));
    h.coords.emplace_back(ctx.ring(), 0, std::move(c), Rational(0), outer);
  }
  return h;
}

}  // namespace wst
