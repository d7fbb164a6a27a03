#include "wst/conditions.hpp"

#include <cmath>

#include "wst/error.hpp"

namespace wst {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::satisfied_empirically: return "satisfied_empirically";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string BoundaryPoint::str(const BaseRing& ring) const {
  if (!fiber) return base.str();
  return fiber->str(ring) + " over " + base.str();
}

NormValue root_bound(const MonicPolynomial& G, const SpectrumPoint& b) {
  NormValue s = NormValue::zero();
  for (int k = 0; k < G.degree(); ++k) {
    const RingElement c = G.coeff(static_cast<std::size_t>(k));
    if (!G.ring().is_zero(c)) s = s + abs_bound_at(b, G.ring(), c);
  }
  return max(NormValue::one(), s);
}

NormValue evaluate_boundary(const BoundaryPoint& x, const Polynomial& P) {
  if (x.fiber) return evaluate_fiber(x.base, *x.fiber, P);
  require(P.degree() <= 0, Errc::invalid_argument, "a base point only evaluates constants");
  return abs_at(x.base, P.ring(), P.coeff(0));
}

ConditionReport check_RG(const MonicPolynomial& G, const AnalyticBoundary& gamma) {
  require(!gamma.empty(), Errc::invalid_argument, "empty boundary");
  ConditionReport rep;
  rep.condition = "R_G";
  const RingElement res = resultant(G.poly(), G.poly().derivative());
  const Polynomial c = Polynomial::constant(G.ring(), res);
  std::optional<NormValue> m;
  for (const auto& x : gamma) {
    const NormValue v = G.ring().is_zero(res) ? NormValue::zero() : evaluate_boundary(x, c);
    m = m ? min(*m, v) : v;
  }
  rep.m_U = m;
  rep.samples = gamma.size();
  if (m->is_zero()) {
    rep.verdict = Verdict::violated;
  } else if (m->is_exact() || m->lower() > 0.0) {
    rep.verdict = Verdict::satisfied;
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.detail = "resultant enclosure contains 0";
  }
  return rep;
}

AnalyticBoundary shilov_point(const SpectrumPoint& b, const Rational& inner, const Rational& outer) {
  require(b.is_ultrametric(), Errc::unsupported_archimedean, "Gauss points need an ultrametric base point");
  require(outer > 0 && inner >= 0 && inner <= outer, Errc::invalid_argument, "need 0 <= inner <= outer, outer > 0");
  const RingElement zero = Rational(0);
  AnalyticBoundary out;
  if (inner > 0 && inner < outer) out.push_back({b, FiberPoint::disk(zero, inner)});
  out.push_back({b, FiberPoint::disk(zero, outer)});
  return out;
}

NormValue spectral_seminorm(const QuotientElement& F, int k_max) {
  require(k_max >= 1 && k_max <= 30, Errc::invalid_argument, "k_max must lie in [1, 30]");
  const BaseRing& ring = F.ring();
  const Rational root(1, Integer(1) << static_cast<unsigned>(k_max));
  if (ring.kind() != RingKind::complex_arch) {
    QuotientElement x = F;
    for (int k = 0; k < k_max; ++k) x = x * x;
    const NormValue d = div_norm(x);
    if (d.is_zero()) return d;
    return pow(d, root);
  }
  // Rescale after every squaring: x_k = F^(2^k) / e^log_scale.
  QuotientElement x = F;
  double log_scale = 0.0;
  for (int k = 0; k < k_max; ++k) {
    x = x * x;
    log_scale *= 2.0;
    const double c = div_norm(x).approx();
    if (c == 0.0) return NormValue::zero();
    require(std::isfinite(c), Errc::overflow, "overflow while squaring");
    x = x.scaled(Complex(1.0 / c, 0.0));
    log_scale += std::log(c);
  }
  const double rest = div_norm(x).approx();
  const double est = std::exp((log_scale + std::log(rest)) * root.get_d());
  return widen(NormValue::interval(est, est), 1e-9);
}

namespace {

bool collapsed(const NormValue& estimate, const NormValue& div, bool exact) {
  if (estimate.is_zero()) return true;
  if (exact) return false;
  return estimate.upper() < 1e-6 * div.lower();
}

}  // namespace

ConditionReport estimate_NG(const MonicPolynomial& G, const Rational& w, std::size_t samples, std::mt19937_64& rng,
                            int k_max) {
  division_constants(G, w);
  const BaseRing& ring = G.ring();
  const int d = G.degree();
  ConditionReport rep;
  rep.condition = "N_G";
  if (d == 1) {
    rep.verdict = Verdict::satisfied;
    rep.constant = NormValue::one();
    rep.detail = "degree 1: the quotient is the base ring";
    return rep;
  }
  const bool exact_data = ring.kind() != RingKind::complex_arch;

  std::vector<Polynomial> candidates;
  if (exact_data) {
    // G / gcd(G, G') is nilpotent modulo G whenever G has a repeated factor.
    bool all_exact = true;
    for (const auto& c : G.poly().coeffs()) {
      if (const auto* a = std::get_if<PAdic>(&c)) all_exact = all_exact && a->is_exact();
    }
    if (all_exact) {
      const BaseRing Q = BaseRing::rationals();
      const Polynomial g = G.poly().change_ring(Q);
      const Polynomial h = gcd(g, g.derivative());
      if (h.degree() > 0) candidates.push_back(divrem(g, h).quotient.change_ring(ring));
    }
  }
  for (int j = 1; j < d; ++j) candidates.push_back(Polynomial::monomial(ring, ring.one(), static_cast<std::size_t>(j)));
  for (std::size_t i = 0; i < samples; ++i) candidates.push_back(random_polynomial(ring, d - 1, rng, 5));

  NormValue worst = NormValue::one();
  for (const auto& f : candidates) {
    const QuotientElement F(G, f);
    const NormValue dn = div_norm(F);
    if (dn.is_zero()) continue;
    const NormValue est = spectral_seminorm(F, k_max);
    ++rep.samples;
    if (collapsed(est, dn, ring.is_exact() || ring.is_padic())) {
      rep.verdict = Verdict::violated;
      rep.witness = F.representative();
      rep.witness_estimate = est;
      rep.detail = "nilpotent class: spectral estimate collapses while div_norm > 0";
      return rep;
    }
    worst = max(worst, dn / est);
  }
  rep.verdict = Verdict::satisfied_empirically;
  rep.constant = worst;
  rep.detail = "no nilpotent witness among sampled classes";
  return rep;
}

}  // namespace wst
