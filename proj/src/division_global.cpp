#include "wst/division_global.hpp"

#include "wst/error.hpp"

namespace wst {

QuotientElement::QuotientElement(MonicPolynomial modulus, const Polynomial& representative)
    : modulus_(std::move(modulus)), rep_(divrem_monic(representative, modulus_.poly()).remainder) {}

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
  return QuotientElement(a.modulus_, a.rep_ + b.rep_);
}

QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
  return QuotientElement(a.modulus_, a.rep_ - b.rep_);
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  return QuotientElement(a.modulus_, a.rep_ * b.rep_);
}

QuotientElement QuotientElement::scaled(const RingElement& c) const { return QuotientElement(modulus_, rep_.scaled(c)); }

NormValue threshold_v(const MonicPolynomial& G) {
  NormValue v = NormValue::one();
  for (int k = 0; k < G.degree(); ++k) v = v + G.ring().norm_bound(G.coeff(static_cast<std::size_t>(k)));
  return v;
}

NormValue poly_norm(const Polynomial& p, const Rational& w) {
  NormValue acc = NormValue::zero();
  NormValue wk = NormValue::one();
  const NormValue wn = NormValue::of(w);
  for (int k = 0; k <= p.degree(); ++k) {
    const RingElement c = p.coeff(static_cast<std::size_t>(k));
    if (!p.ring().is_zero(c)) acc = acc + p.ring().norm_bound(c) * wk;
    wk = wk * wn;
  }
  return acc;
}

DivisionConstants division_constants(const MonicPolynomial& G, const Rational& w) {
  require(G.degree() >= 1, Errc::invalid_argument, "divisor must have degree >= 1");
  DivisionConstants k;
  k.v = threshold_v(G);
  require(NormValue::of(w) >= k.v, Errc::radius_too_small,
          "w = " + to_string(w) + " is below the threshold v = " + k.v.str());
  const int d = G.degree();
  const NormValue wd = NormValue::of(rpow(w, d));
  NormValue lower = NormValue::zero();
  for (int i = 0; i < d; ++i) {
    const RingElement c = G.coeff(static_cast<std::size_t>(i));
    if (!G.ring().is_zero(c)) lower = lower + G.ring().norm_bound(c) * NormValue::of(rpow(w, i));
  }
  k.rho = lower / wd;
  const NormValue g_norm = lower + wd;
  const auto one_minus_rho = [&]() -> NormValue {
    if (auto q = k.rho.rational()) return NormValue::of(1 - *q);
    const auto e = k.rho.enclosure();
    return NormValue::interval(std::max(0.0, round_down(1.0 - e.hi)), round_up(1.0 - e.lo));
  }();
  require(!one_minus_rho.is_zero() && one_minus_rho.lower() > 0.0, Errc::radius_too_small,
          "reduction ratio is not below 1");
  k.C = (NormValue::one() + g_norm / wd) / one_minus_rho;
  return k;
}

DivisionCertificate divide_global(const Series& F, const MonicPolynomial& G, const Rational& w) {
  require(F.ring() == G.ring(), Errc::malformed_element, "F and G live over different rings");
  require(F.is_disk(), Errc::invalid_argument, "global division needs a disk series");
  require(F.outer() >= w, Errc::radius_too_small, "series radius is smaller than w");
  const DivisionConstants k = division_constants(G, w);
  const BaseRing& R = F.ring();
  const int d = G.degree();
  const long hi = F.hi();
  std::vector<RingElement> r;
  for (long n = 0; n <= hi; ++n) r.push_back(F.coeff(n));
  std::vector<RingElement> q(static_cast<std::size_t>(std::max(0L, hi - d + 1)), R.zero());
  for (long n = hi; n >= d; --n) {
    const RingElement c = r[static_cast<std::size_t>(n)];
    q[static_cast<std::size_t>(n - d)] = c;
    if (R.is_zero(c)) continue;
    r[static_cast<std::size_t>(n)] = R.zero();
    for (int i = 0; i < d; ++i) {
      auto& slot = r[static_cast<std::size_t>(n - d + i)];
      slot = R.sub(slot, R.mul(c, G.coeff(static_cast<std::size_t>(i))));
    }
  }
  r.resize(static_cast<std::size_t>(std::min<long>(d, hi + 1)));

  DivisionCertificate cert;
  cert.w = w;
  cert.v = k.v;
  cert.C = k.C;
  cert.rho = k.rho;
  const NormValue tail = k.C * F.tail();
  cert.Q = Series(R, 0, std::move(q), Rational(0), w, tail);
  cert.R = Series(R, 0, std::move(r), Rational(0), w, tail);
  cert.norm_F = norm_at(F, NormKind::sum, Rational(0), w);
  cert.norm_Q = series_norm(cert.Q, NormKind::sum);
  cert.norm_R = series_norm(cert.R, NormKind::sum);
  const NormValue bound = k.C * cert.norm_F;
  require(cert.norm_Q <= bound && cert.norm_R <= bound, Errc::tail_obstruction,
          "could not certify ||Q||_w, ||R||_w <= C ||F||_w (bound " + bound.str() + ")");
  return cert;
}

Polynomial random_polynomial(const BaseRing& ring, int deg, std::mt19937_64& rng, long bound) {
  std::vector<RingElement> c;
  for (int k = 0; k <= deg; ++k) c.push_back(random_element(ring, rng, bound));
  return Polynomial(ring, std::move(c));
}

ResidueNormBracket residue_norm(const QuotientElement& F, const Rational& w, std::size_t trials,
                                std::mt19937_64& rng) {
  division_constants(F.modulus(), w);
  ResidueNormBracket out;
  out.upper = poly_norm(F.representative(), w);
  out.lower_estimate = out.upper;
  std::uniform_int_distribution<int> deg(0, 3);
  for (std::size_t i = 0; i < trials; ++i) {
    const Polynomial h = random_polynomial(F.ring(), deg(rng), rng, 5);
    const Polynomial rep = F.representative() + h * F.modulus().poly();
    out.lower_estimate = min(out.lower_estimate, poly_norm(rep, w));
  }
  out.trials = trials;
  return out;
}

NormValue div_norm(const QuotientElement& F) {
  NormValue m = NormValue::zero();
  for (int i = 0; i < F.degree(); ++i) {
    const RingElement c = F.coord(i);
    if (!F.ring().is_zero(c)) m = max(m, F.ring().norm_bound(c));
  }
  return m;
}

SandwichReport sandwich_check(const QuotientElement& F, const Rational& w, const NormValue& C, std::size_t samples,
                              std::mt19937_64& rng) {
  division_constants(F.modulus(), w);
  SandwichReport rep;
  rep.C = C;
  rep.div = div_norm(F);
  rep.canonical_norm = poly_norm(F.representative(), w);
  rep.canonical_dominates_div = rep.div <= rep.canonical_norm;
  std::uniform_int_distribution<int> deg(0, 3);
  for (std::size_t i = 0; i <= samples; ++i) {
    Polynomial r = F.representative();
    if (i > 0) r = r + random_polynomial(F.ring(), deg(rng), rng, 5) * F.modulus().poly();
    const NormValue bound = C * poly_norm(r, w);
    if (!(rep.div <= bound)) ++rep.violations;
  }
  rep.samples = samples + 1;
  return rep;
}

}  // namespace wst
