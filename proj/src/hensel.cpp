#include "wst/hensel.hpp"

#include <algorithm>

#include "wst/error.hpp"
#include "wst/fp_poly.hpp"

namespace wst {

namespace {

using ZPoly = std::vector<Integer>;  // coefficients mod m, low to high

Integer pk(unsigned long p, std::int64_t k) { return ipow(Integer(p), static_cast<unsigned long>(k)); }

std::int64_t val_mod(const Integer& x, unsigned long p, std::int64_t cap) {
  if (x == 0) return cap;
  return std::min(valuation(x, p), cap);
}

// Residue of a p-integral coefficient modulo p^n.
Integer coefficient_residue(const BaseRing& ring, const RingElement& c, unsigned long p, std::int64_t n) {
  if (ring.is_padic()) {
    require(ring.prime() == p, Errc::unsupported_point, "point and base ring use different primes");
    return std::get<PAdic>(c).residue(n);
  }
  const Rational q = ring.to_rational(c);
  require(q.get_den() % p != 0, Errc::invalid_argument, to_string(q) + " is not p-integral");
  return rational_mod(q, pk(p, n));
}

Integer horner(const ZPoly& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * x + *it, m);
  return acc;
}

ZPoly trimz(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& x : a) x = mod(x, m);
  return trimz(std::move(a));
}

ZPoly addz(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] += b[i];
  }
  return reduce(std::move(c), m);
}

ZPoly subz(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] -= b[i];
  }
  return reduce(std::move(c), m);
}

ZPoly mulz(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return reduce(std::move(c), m);
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divrem_monicz(const ZPoly& a, const ZPoly& b, const Integer& m) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {{}, a};
  ZPoly r = a;
  ZPoly q(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (int k = da; k >= db; --k) {
    const Integer c = mod(r[static_cast<std::size_t>(k)], m);
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {reduce(std::move(q), m), reduce(std::move(r), m)};
}

ZPoly to_z(const fp::Poly& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

fp::Poly product(std::uint64_t p, const std::vector<fp::Poly>& us, std::size_t from, std::size_t to) {
  fp::Poly acc{1};
  for (std::size_t i = from; i < to; ++i) acc = fp::mul(p, acc, us[i]);
  return acc;
}

// Quadratic lifting of f = g h (mod p) to f = g* h* (mod p^N), g and h monic
// and coprime modulo p.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& f, const fp::Poly& g0, const fp::Poly& h0, unsigned long p,
                                  std::int64_t N) {
  const fp::Bezout bz = fp::extgcd(p, g0, h0);
  require(bz.g.size() == 1 && bz.g[0] == 1, Errc::not_squarefree_residue_support,
          "residue factors are not coprime");
  // Normalize to deg s < deg h, deg t < deg g.
  const fp::Poly s0 = fp::mod(p, bz.s, h0);
  const fp::Poly t0 = fp::divrem(p, fp::sub(p, fp::Poly{1}, fp::mul(p, s0, g0)), h0).first;
  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  const Integer target = pk(p, N);
  Integer m(p);
  while (m < target) {
    Integer m2 = m * m;
    if (m2 > target) m2 = target;
    const ZPoly e = subz(f, mulz(g, h, m2), m2);
    auto [q, r] = divrem_monicz(mulz(s, e, m2), h, m2);
    const ZPoly g2 = addz(addz(g, mulz(t, e, m2), m2), mulz(q, g, m2), m2);
    const ZPoly h2 = addz(h, r, m2);
    const ZPoly b = subz(addz(mulz(s, g2, m2), mulz(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
    auto [c, d] = divrem_monicz(mulz(s, b, m2), h2, m2);
    s = subz(s, d, m2);
    t = subz(subz(t, mulz(t, b, m2), m2), mulz(c, g2, m2), m2);
    g = g2;
    h = h2;
    m = m2;
  }
  return {g, h};
}

void lift_all(const ZPoly& f, const std::vector<fp::Poly>& us, std::size_t from, std::size_t to, unsigned long p,
              std::int64_t N, std::vector<ZPoly>& out) {
  if (to - from == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t mid = from + (to - from) / 2;
  auto [a, b] = lift_pair(f, product(p, us, from, mid), product(p, us, mid, to), p, N);
  lift_all(a, us, from, mid, p, N, out);
  lift_all(b, us, mid, to, p, N, out);
}

}  // namespace

HenselResult hensel_lift(const HenselProblem& prob, std::int64_t target) {
  const BaseRing& ring = prob.ring;
  require(ring.is_padic(), Errc::invalid_argument, "Hensel lifting needs a p-adic base ring");
  require(target >= 1, Errc::invalid_argument, "target precision must be >= 1");
  require(prob.ostrowski_lambda == 0, Errc::invalid_argument, "ultrametric bases have lambda = 0");
  const unsigned long p = ring.prime();
  const Polynomial P = prob.P.ring() == ring ? prob.P : prob.P.change_ring(ring);
  HenselResult out;

  const PAdic f0 = std::get<PAdic>(prob.f0);
  if (f0.is_exact()) {
    const RingElement v0 = P.eval(prob.f0);
    if (ring.is_zero(v0)) {
      require(!ring.norm(P.derivative().eval(prob.f0)).is_zero() &&
                  ring.norm(P.derivative().eval(prob.f0)) == NormValue::one(),
              Errc::not_unit, "|P'(f0)| < 1");
      out.h = f0;
      out.K = prob.K.value_or(NormValue::of(Rational(1, 2)));
      out.log.push_back({0, PAdic::kInfinite, NormValue::zero(), NormValue::zero(), true});
      return out;
    }
  }

  // Work modulo p^W with W = 2 * target so the logged valuations are true
  // valuations, not truncated at the target.
  std::int64_t W = 2 * target;
  for (const auto& c : P.coeffs()) W = std::min(W, std::get<PAdic>(c).absolute_precision());
  require(W >= target, Errc::precision_exhausted, "coefficients of P are known to fewer than target digits");
  const Integer M = pk(p, W);
  ZPoly coeffs;
  for (const auto& c : P.coeffs()) coeffs.push_back(coefficient_residue(ring, c, p, W));
  ZPoly dcoeffs;
  for (std::size_t k = 1; k < coeffs.size(); ++k) dcoeffs.push_back(mod(coeffs[k] * static_cast<unsigned long>(k), M));

  const std::int64_t f0_abs = std::min(W, f0.absolute_precision());
  const Integer f = f0.residue(f0_abs);
  const Integer df0 = horner(dcoeffs, f, M);
  require(df0 % p != 0, Errc::not_unit, "|P'(f0)| < 1");
  const Integer Pf0 = horner(coeffs, f, M);
  const std::int64_t vP0 = val_mod(Pf0, p, W);
  require(vP0 >= 1, Errc::no_progress, "|P(f0)| = 1: f0 is not an approximate root");
  const NormValue N = NormValue::p_power(p, Rational(-vP0));
  out.K = prob.K.value_or(NormValue::of((prime_power(p, -vP0) + 1) / 2));
  require(out.K < NormValue::one() && N < out.K, Errc::invalid_argument, "contraction constant must lie in (N, 1)");

  out.log.push_back({0, vP0, NormValue::zero(), NormValue::zero(), true});
  Integer h = f;
  std::int64_t v = vP0;
  for (int k = 1; v < target; ++k) {
    require(k <= 64, Errc::no_progress, "Newton iteration did not converge");
    const Integer Ph = horner(coeffs, h, M);
    const Integer dPh = horner(dcoeffs, h, M);
    h = mod(h - Ph * mod_inverse(dPh, M), M);
    const Integer Pnew = horner(coeffs, h, M);
    v = val_mod(Pnew, p, W);
    // R(g) for g = (h - f0)/P(f0): |R(g)| = |P(h) - P(f0) - P'(f0)(h - f0)| / |P(f0)|.
    const Integer diff = mod(h - f, M);
    const Integer num = mod(Pnew - Pf0 - df0 * diff, M);
    HenselStep step;
    step.step = k;
    step.certified_precision = v;
    if (diff != 0) {
      step.contraction_lhs = NormValue::p_power(p, Rational(vP0 - val_mod(num, p, W)));
      step.contraction_rhs = out.K * NormValue::p_power(p, Rational(vP0 - val_mod(diff, p, W)));
      step.contraction_ok = step.contraction_lhs <= step.contraction_rhs;
    }
    out.log.push_back(step);
    require(step.contraction_ok, Errc::no_progress,
            "contraction violated at step " + std::to_string(k) + ": " + step.contraction_lhs.str() + " > " +
                step.contraction_rhs.str());
  }
  out.h = PAdic::approx(Rational(mod(h, pk(p, target))), target, p, std::max(ring.precision(), target));
  return out;
}

FactorizationDG factor_DG(const MonicPolynomial& G, const SpectrumPoint& b, std::int64_t N, std::uint64_t seed) {
  require(b.kind == SpectrumPoint::Kind::padic, Errc::unsupported_point, "factor_DG needs a p-adic point");
  require(N >= 1, Errc::invalid_argument, "precision must be >= 1");
  const unsigned long p = b.p;
  const BaseRing& ring = G.ring();
  const Integer PN = pk(p, N);
  ZPoly f;
  for (const auto& c : G.poly().coeffs()) f.push_back(coefficient_residue(ring, c, p, N));
  std::vector<Integer> low(f.begin(), f.end());
  std::mt19937_64 rng(seed);
  const auto residue_factors = fp::factor(p, fp::from_integers(p, low), rng);
  std::vector<fp::Poly> powers;
  FactorizationDG out;
  out.precision = N;
  for (const auto& [h, n] : residue_factors) {
    fp::Poly u{1};
    for (int i = 0; i < n; ++i) u = fp::mul(p, u, h);
    powers.push_back(u);
    std::vector<Integer> hz;
    for (auto c : h) hz.emplace_back(static_cast<unsigned long>(c));
    out.residues.push_back(hz);
    out.multiplicities.push_back(n);
  }
  std::vector<ZPoly> lifted;
  lift_all(f, powers, 0, powers.size(), p, N, lifted);
  const BaseRing Z = BaseRing::integers();
  Polynomial prod = Polynomial::constant(Z, Z.one());
  for (auto& l : lifted) {
    l = reduce(std::move(l), PN);
    std::vector<RingElement> c(l.begin(), l.end());
    Polynomial H(Z, std::move(c));
    require(H.is_monic(), Errc::no_progress, "lifted factor lost monicity");
    prod = prod * H;
    out.factors.push_back(H);
  }
  // Residual |G - prod H_i|_p over the rationals.
  out.residual = NormValue::zero();
  for (int k = 0; k <= std::max(prod.degree(), G.degree()); ++k) {
    const Rational gk = ring.to_rational(G.coeff(static_cast<std::size_t>(k)));
    const Rational hk(std::get<Integer>(prod.coeff(static_cast<std::size_t>(k))));
    const Rational diff = gk - hk;
    if (diff != 0) out.residual = max(out.residual, NormValue::p_power(p, Rational(-valuation(diff, p))));
  }
  return out;
}

}  // namespace wst
