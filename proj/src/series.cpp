#include "wst/series.hpp"

#include <algorithm>
#include <cmath>

#include "wst/error.hpp"
#include "wst/kernels.hpp"

namespace wst {

bool precedes(const Rational& s, const Rational& t) { return s < t || s == 0; }

NormValue weight(long n, const Rational& s, const Rational& t) {
  if (n >= 0) return NormValue::of(rpow(t, n));
  require(s > 0, Errc::invalid_argument, "negative exponent on a disk");
  return NormValue::of(rpow(s, n));
}

Series::Series(BaseRing ring, long lo, std::vector<RingElement> coeffs, Rational inner, Rational outer,
               NormValue tail)
    : ring_(std::move(ring)),
      lo_(lo),
      coeffs_(std::move(coeffs)),
      inner_(std::move(inner)),
      outer_(std::move(outer)),
      tail_(std::move(tail)) {
  require(inner_ >= 0 && outer_ > 0 && inner_ <= outer_, Errc::invalid_argument,
          "series radii must satisfy 0 <= inner <= outer, outer > 0");
  if (coeffs_.empty()) {
    coeffs_.push_back(ring_.zero());
    lo_ = std::max(lo_, 0L);
  }
  for (const auto& c : coeffs_) ring_.check(c);
  require(inner_ > 0 || lo_ >= 0, Errc::invalid_argument, "disk series cannot have negative exponents");
}

Series Series::from_polynomial(const Polynomial& p, const Rational& outer) {
  return Series(p.ring(), 0, p.coeffs(), Rational(0), outer);
}

Series Series::zero(const BaseRing& ring, const Rational& inner, const Rational& outer) {
  return Series(ring, 0, {ring.zero()}, inner, outer);
}

Series Series::monomial(const BaseRing& ring, const RingElement& c, long k, const Rational& inner,
                        const Rational& outer) {
  return Series(ring, k, {c}, inner, outer);
}

RingElement Series::coeff(long n) const {
  if (n < lo_ || n > hi()) return ring_.zero();
  return coeffs_[static_cast<std::size_t>(n - lo_)];
}

bool Series::window_is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const RingElement& c) { return ring_.is_zero(c); });
}

Series Series::with_tail(const NormValue& tail) const {
  Series r = *this;
  r.tail_ = tail;
  return r;
}

Series Series::restricted(const Rational& inner, const Rational& outer) const {
  require(inner_ <= inner && inner <= outer && outer <= outer_, Errc::empty_radius_intersection,
          "radii [" + to_string(inner) + ", " + to_string(outer) + "] leave the series annulus");
  Series r = *this;
  r.inner_ = inner;
  r.outer_ = outer;
  return r;
}

Series Series::truncated(long hi_keep) const {
  if (hi_keep >= hi()) return *this;
  NormValue charge = tail_;
  std::vector<RingElement> kept;
  for (long n = lo_; n <= hi(); ++n) {
    const RingElement& c = coeffs_[static_cast<std::size_t>(n - lo_)];
    if (n <= hi_keep) kept.push_back(c);
    else if (!ring_.is_zero(c)) charge = charge + ring_.norm_bound(c) * weight(n, inner_, outer_);
  }
  return Series(ring_, kept.empty() ? std::max(0L, lo_) : lo_, std::move(kept), inner_, outer_, charge);
}

Series Series::widened(long lo, long hi_new) const {
  const long a = std::min(lo, lo_);
  const long b = std::max(hi_new, hi());
  std::vector<RingElement> c(static_cast<std::size_t>(b - a + 1), ring_.zero());
  for (long n = lo_; n <= hi(); ++n) c[static_cast<std::size_t>(n - a)] = coeffs_[static_cast<std::size_t>(n - lo_)];
  return Series(ring_, a, std::move(c), inner_, outer_, tail_);
}

Polynomial Series::to_polynomial() const {
  for (long n = lo_; n < 0; ++n) {
    require(ring_.is_zero(coeff(n)), Errc::invalid_argument, "series has negative exponents");
  }
  std::vector<RingElement> c;
  for (long n = 0; n <= hi(); ++n) c.push_back(coeff(n));
  return Polynomial(ring_, std::move(c));
}

RingElement Series::eval(const RingElement& x) const {
  RingElement acc = ring_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
  if (lo_ > 0) acc = ring_.mul(acc, ring_.pow(x, static_cast<unsigned long>(lo_)));
  if (lo_ < 0) acc = ring_.mul(acc, ring_.pow(ring_.inv(x), static_cast<unsigned long>(-lo_)));
  return acc;
}

std::string Series::str(const std::string& var) const {
  std::string out;
  for (long n = lo_; n <= hi(); ++n) {
    const RingElement& c = coeffs_[static_cast<std::size_t>(n - lo_)];
    if (ring_.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += ring_.to_string(c);
    if (n != 0) out += "*" + var + "^" + std::to_string(n);
  }
  if (out.empty()) out = "0";
  if (!tail_.is_zero()) out += " + O(" + tail_.str() + ")";
  return out;
}

NormValue window_norm(const Series& f, NormKind kind, const Rational& s, const Rational& t) {
  require(kind == NormKind::sum || f.ring().is_ultrametric(), Errc::incompatible_norm_kind,
          "max norm needs an ultrametric base ring");
  NormValue acc = NormValue::zero();
  for (long n = f.lo(); n <= f.hi(); ++n) {
    const RingElement c = f.coeff(n);
    if (f.ring().is_zero(c)) continue;
    const NormValue term = f.ring().norm_bound(c) * weight(n, s, t);
    acc = kind == NormKind::sum ? acc + term : max(acc, term);
  }
  return acc;
}

NormValue norm_at(const Series& f, NormKind kind, const Rational& s, const Rational& t) {
  require(f.inner() <= s && s <= t && t <= f.outer(), Errc::empty_radius_intersection,
          "radii outside the series annulus");
  const NormValue w = window_norm(f, kind, s, t);
  return kind == NormKind::sum ? w + f.tail() : max(w, f.tail());
}

NormValue series_norm(const Series& f, NormKind kind) { return norm_at(f, kind, f.inner(), f.outer()); }

namespace {

std::pair<Rational, Rational> common_radii(const Series& f, const Series& g) {
  require(f.ring() == g.ring(), Errc::malformed_element, "series over different rings");
  Rational s = std::max(f.inner(), g.inner());
  Rational t = std::min(f.outer(), g.outer());
  require(s <= t, Errc::empty_radius_intersection, "series annuli do not intersect");
  return {s, t};
}

}  // namespace

Series operator+(const Series& f, const Series& g) {
  const auto [s, t] = common_radii(f, g);
  const BaseRing& R = f.ring();
  const long a = std::min(f.lo(), g.lo());
  const long b = std::max(f.hi(), g.hi());
  std::vector<RingElement> c;
  c.reserve(static_cast<std::size_t>(b - a + 1));
  for (long n = a; n <= b; ++n) c.push_back(R.add(f.coeff(n), g.coeff(n)));
  return Series(R, a, std::move(c), s, t, f.tail() + g.tail());
}

Series operator-(const Series& f) {
  std::vector<RingElement> c;
  for (const auto& x : f.coeffs()) c.push_back(f.ring().neg(x));
  return Series(f.ring(), f.lo(), std::move(c), f.inner(), f.outer(), f.tail());
}

Series operator-(const Series& f, const Series& g) { return f + (-g); }

Series scale(const Series& f, const RingElement& c) {
  std::vector<RingElement> out;
  for (const auto& x : f.coeffs()) out.push_back(f.ring().mul(x, c));
  return Series(f.ring(), f.lo(), std::move(out), f.inner(), f.outer(), f.tail() * f.ring().norm_bound(c));
}

Series mul(const Series& f, const Series& g, std::optional<std::pair<long, long>> keep) {
  const auto [s, t] = common_radii(f, g);
  const BaseRing& R = f.ring();
  const long lo = f.lo() + g.lo();
  std::vector<RingElement> prod;
  if (R.kind() == RingKind::complex_arch) {
    std::vector<Complex> a, b;
    for (const auto& x : f.coeffs()) a.push_back(std::get<Complex>(x));
    for (const auto& x : g.coeffs()) b.push_back(std::get<Complex>(x));
    for (const auto& z : kernels::convolve_parallel(a, b)) prod.emplace_back(z);
  } else {
    prod.assign(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (R.is_zero(f.coeffs()[i])) continue;
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
        if (R.is_zero(g.coeffs()[j])) continue;
        prod[i + j] = R.add(prod[i + j], R.mul(f.coeffs()[i], g.coeffs()[j]));
      }
    }
  }
  NormValue tail = NormValue::zero();
  if (!f.tail().is_zero() || !g.tail().is_zero()) {
    const NormValue nf = window_norm(f, NormKind::sum, s, t);
    const NormValue ng = window_norm(g, NormKind::sum, s, t);
    tail = nf * g.tail() + f.tail() * ng + f.tail() * g.tail();
  }
  if (!keep) return Series(R, lo, std::move(prod), s, t, tail);
  const auto [klo, khi] = *keep;
  std::vector<RingElement> kept;
  for (long n = klo; n <= khi; ++n) {
    const long i = n - lo;
    kept.push_back(i >= 0 && i < static_cast<long>(prod.size()) ? prod[static_cast<std::size_t>(i)] : R.zero());
  }
  for (long i = 0; i < static_cast<long>(prod.size()); ++i) {
    const long n = lo + i;
    if (n >= klo && n <= khi) continue;
    const RingElement& c = prod[static_cast<std::size_t>(i)];
    if (!R.is_zero(c)) tail = tail + R.norm_bound(c) * weight(n, s, t);
  }
  return Series(R, klo, std::move(kept), s, t, tail);
}

SupBracket sup_bracket(const Series& f, std::size_t grid, bool parallel) {
  const BaseRing& R = f.ring();
  const Rational& s = f.inner();
  const Rational& t = f.outer();
  if (R.is_ultrametric()) {
    const NormValue gauss = window_norm(f, NormKind::ultrametric_max, s, t);
    const NormValue upper = max(gauss, f.tail());
    const NormValue lower = (gauss > f.tail()) ? gauss : NormValue::zero();
    return {lower, upper};
  }
  require(grid >= 8, Errc::invalid_argument, "sup bracket grid too small");
  std::vector<Complex> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(R.to_complex(c));
  const long m = static_cast<long>(coeffs.size());
  // Rounding allowance: Horner, the complex sample point and the input
  // conversion, all bounded by a multiple of u * sum (1+|k|) |a_k| rho^k.
  const NormValue unit_round = NormValue::of(Rational(8 * (m + 8)) * prime_power(2, -53));
  const NormValue step = NormValue::of(Rational(355, 113 * static_cast<long>(grid)) + Rational(1, 100000000000000L));
  std::vector<Rational> radii{t};
  if (s > 0 && s != t) radii.push_back(s);
  NormValue lower = NormValue::zero();
  NormValue upper = NormValue::zero();
  for (const Rational& rho : radii) {
    NormValue mass = NormValue::zero();
    NormValue lip = NormValue::zero();
    for (long k = f.lo(); k <= f.hi(); ++k) {
      const RingElement c = f.coeff(k);
      if (R.is_zero(c)) continue;
      const NormValue term = R.norm(c) * NormValue::of(rpow(rho, k));
      mass = mass + NormValue::of(Rational(1 + std::labs(k))) * term;
      if (k != 0) lip = lip + NormValue::of(Rational(std::labs(k))) * term;
    }
    const NormValue err = unit_round * mass;
    const double r = rho.get_d();
    const auto best = parallel ? kernels::circle_max_parallel(coeffs, static_cast<int>(f.lo()), r, grid)
                               : kernels::circle_max_serial(coeffs, static_cast<int>(f.lo()), r, grid);
    const double lo_val = std::max(0.0, round_down(round_down(best.max_abs - err.upper()) - f.tail().upper()));
    lower = max(lower, NormValue::interval(lo_val, lo_val));
    const NormValue up = NormValue::interval(best.max_abs, best.max_abs) + err + lip * step + f.tail();
    upper = max(upper, up);
  }
  return {lower, upper};
}

CoefficientBoundReport coefficient_bound_check(const Series& f, const Rational& u, const Rational& v,
                                               const SupBracket& bracket) {
  const Rational& s = f.inner();
  const Rational& t = f.outer();
  require(precedes(s, u) && u <= v && v < t, Errc::invalid_argument, "need s < u <= v < t (or s = 0)");
  require((bracket.lower <=> bracket.upper) != std::partial_ordering::greater, Errc::bad_bracket,
          "sup bracket has lower > upper");
  CoefficientBoundReport rep;
  rep.bracket = bracket;
  rep.lhs = norm_at(f, NormKind::sum, u, v);
  const Rational inner_part = s == 0 ? Rational(0) : Rational(s / (u - s));
  rep.factor = NormValue::of(inner_part + t / (t - v));
  rep.rhs = rep.factor * bracket.upper;
  const auto c = rep.lhs <=> rep.rhs;
  rep.holds = c == std::partial_ordering::less || c == std::partial_ordering::equivalent;
  return rep;
}

PiContent pi_content(const Series& f) {
  const BaseRing& R = f.ring();
  require(R.kind() == RingKind::padic_dvr, Errc::invalid_argument, "pi-content needs a p-adic DVR");
  const unsigned long p = R.prime();
  std::optional<std::int64_t> v;
  std::optional<std::int64_t> blind;  // smallest absolute precision among O(p^A) entries
  for (const auto& c : f.coeffs()) {
    const PAdic& x = std::get<PAdic>(c);
    if (x.is_exact_zero()) continue;
    if (x.state() == PAdic::State::approx_zero) {
      blind = blind ? std::min(*blind, x.valuation()) : x.valuation();
      continue;
    }
    v = v ? std::min(*v, x.valuation()) : x.valuation();
  }
  require(v.has_value(), Errc::zero_series, "every coefficient is certified zero");
  require(!blind || *blind >= *v, Errc::precision_exhausted,
          "a coefficient known only modulo p^" + std::to_string(*blind) + " could have smaller valuation");
  require(f.tail() < NormValue::p_power(p, Rational(-*v)), Errc::tail_obstruction,
          "tail bound " + f.tail().str() + " cannot certify valuation " + std::to_string(*v));
  const RingElement scale_down = R.fraction_field().from_rational(prime_power(p, -*v));
  std::vector<RingElement> g;
  for (const auto& c : f.coeffs()) g.push_back(std::get<PAdic>(c) * std::get<PAdic>(scale_down));
  const NormValue tail = f.tail() * NormValue::p_power(p, Rational(*v));
  return {static_cast<long>(*v), Series(R, f.lo(), std::move(g), f.inner(), f.outer(), tail)};
}

}  // namespace wst
