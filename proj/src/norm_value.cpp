#include "wst/norm_value.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wst/error.hpp"

namespace wst {

namespace {

constexpr mpfr_prec_t kPrec = 160;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, kPrec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// base^(a/c) rounded toward rnd, base >= 0, c >= 1. Monotone steps only, so
// directed rounding composes.
double rational_power_bound(const Rational& base, long a, unsigned long c, mpfr_rnd_t rnd) {
  Mpfr x;
  mpfr_set_q(x.v, base.get_mpq_t(), rnd);
  if (a < 0) {
    // base^(-|a|/c) = 1 / base^(|a|/c): the inner value rounds the other way.
    const mpfr_rnd_t inner = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
    mpfr_set_q(x.v, base.get_mpq_t(), inner);
    mpfr_pow_ui(x.v, x.v, static_cast<unsigned long>(-a), inner);
    if (c > 1) mpfr_rootn_ui(x.v, x.v, c, inner);
    mpfr_ui_div(x.v, 1, x.v, rnd);
  } else {
    if (a != 1) mpfr_pow_ui(x.v, x.v, static_cast<unsigned long>(a), rnd);
    if (c > 1) mpfr_rootn_ui(x.v, x.v, c, rnd);
  }
  return mpfr_get_d(x.v, rnd);
}

double double_power_bound(double x, long a, unsigned long c, mpfr_rnd_t rnd) {
  Mpfr m;
  if (std::isinf(x)) return a > 0 ? kInf : 0.0;
  if (x == 0.0) return a > 0 ? 0.0 : kInf;
  if (a < 0) {
    const mpfr_rnd_t inner = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
    mpfr_set_d(m.v, x, inner);
    mpfr_pow_ui(m.v, m.v, static_cast<unsigned long>(-a), inner);
    if (c > 1) mpfr_rootn_ui(m.v, m.v, c, inner);
    mpfr_ui_div(m.v, 1, m.v, rnd);
  } else {
    mpfr_set_d(m.v, x, rnd);
    mpfr_pow_ui(m.v, m.v, static_cast<unsigned long>(a), rnd);
    if (c > 1) mpfr_rootn_ui(m.v, m.v, c, rnd);
  }
  return mpfr_get_d(m.v, rnd);
}

long checked_long(const Integer& n) {
  require(n.fits_slong_p(), Errc::overflow, "exponent out of range: " + to_string(n));
  return n.get_si();
}

unsigned long checked_ulong(const Integer& n) {
  require(n.fits_ulong_p() && n > 0, Errc::overflow, "root index out of range: " + to_string(n));
  return n.get_ui();
}

NormValue::Radical canonical(Rational base, std::uint64_t root) {
  if (base == 0 || base == 1 || root == 1) return {base, base == 0 || base == 1 ? 1 : root};
  std::uint64_t rest = root;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (q * q > rest) q = rest;
    while (rest % q == 0) {
      rest /= q;
      if (auto r = exact_root(base, q)) {
        base = *r;
        root /= q;
      }
    }
  }
  return {base, root};
}

NormValue::Radical to_radical(const NormValue::Rep& rep) {
  if (auto* r = std::get_if<NormValue::Radical>(&rep)) return *r;
  const auto& pp = std::get<NormValue::PPower>(rep);
  const long a = checked_long(pp.exponent.get_num());
  const unsigned long c = checked_ulong(pp.exponent.get_den());
  return canonical(rpow(Rational(Integer(pp.p)), a), c);
}

std::partial_ordering compare_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering compare_intervals(const NormValue::Interval& a, const NormValue::Interval& b) {
  if (a.hi < b.lo) return std::partial_ordering::less;
  if (a.lo > b.hi) return std::partial_ordering::greater;
  if (a.lo == a.hi && b.lo == b.hi && a.lo == b.lo) return std::partial_ordering::equivalent;
  return std::partial_ordering::unordered;
}

NormValue interval_product(const NormValue::Interval& a, const NormValue::Interval& b) {
  if ((a.lo == 0.0 && a.hi == 0.0) || (b.lo == 0.0 && b.hi == 0.0)) return NormValue::zero();
  const double lo = std::max(0.0, round_down(a.lo * b.lo));
  const double hi = round_up(a.hi * b.hi);
  return NormValue::interval(lo, std::isnan(hi) ? kInf : hi);
}

}  // namespace

double round_down(double x) { return std::nextafter(x, -kInf); }
double round_up(double x) { return std::nextafter(x, kInf); }

NormValue NormValue::of(const Rational& q) {
  require(q >= 0, Errc::invalid_argument, "negative norm value " + to_string(q));
  return NormValue(Radical{q, 1});
}

NormValue NormValue::p_power(std::uint64_t p, const Rational& exponent) {
  require(is_prime(p), Errc::invalid_argument, "p-power base must be prime");
  if (exponent == 0) return one();
  return NormValue(PPower{p, exponent});
}

NormValue NormValue::radical(const Rational& base, std::uint64_t root) {
  require(base >= 0 && root >= 1, Errc::invalid_argument, "bad radical");
  return NormValue(canonical(base, root));
}

NormValue NormValue::interval(double lo, double hi) {
  require(!std::isnan(lo) && !std::isnan(hi) && lo >= 0.0 && lo <= hi && !std::isinf(lo),
          Errc::invalid_argument, "bad norm interval");
  return NormValue(Interval{lo, hi});
}

NormValue::Form NormValue::form() const {
  if (std::holds_alternative<Interval>(rep_)) return Form::interval;
  if (std::holds_alternative<PPower>(rep_)) return Form::p_power;
  return std::get<Radical>(rep_).root == 1 ? Form::rational : Form::radical;
}

bool NormValue::is_zero() const {
  if (auto* r = std::get_if<Radical>(&rep_)) return r->base == 0;
  if (auto* i = std::get_if<Interval>(&rep_)) return i->hi == 0.0;
  return false;
}

std::optional<Rational> NormValue::rational() const {
  if (auto* r = std::get_if<Radical>(&rep_)) {
    if (r->root == 1) return r->base;
    return std::nullopt;
  }
  if (auto* pp = std::get_if<PPower>(&rep_)) {
    if (is_integer(pp->exponent)) return prime_power(pp->p, checked_long(pp->exponent.get_num()));
  }
  return std::nullopt;
}

NormValue::Interval NormValue::enclosure() const {
  if (auto* i = std::get_if<Interval>(&rep_)) return *i;
  const Radical r = to_radical(rep_);
  if (r.root == 1) {
    Mpfr x;
    mpfr_set_q(x.v, r.base.get_mpq_t(), MPFR_RNDD);
    const double lo = mpfr_get_d(x.v, MPFR_RNDD);
    mpfr_set_q(x.v, r.base.get_mpq_t(), MPFR_RNDU);
    return {lo, mpfr_get_d(x.v, MPFR_RNDU)};
  }
  return {rational_power_bound(r.base, 1, r.root, MPFR_RNDD),
          rational_power_bound(r.base, 1, r.root, MPFR_RNDU)};
}

double NormValue::approx() const {
  if (auto q = rational()) return q->get_d();
  if (!is_exact()) {
    const Interval i = enclosure();
    return std::isinf(i.hi) ? i.hi : 0.5 * (i.lo + i.hi);
  }
  const Radical r = to_radical(rep_);
  return rational_power_bound(r.base, 1, r.root, MPFR_RNDN);
}

std::string NormValue::str() const {
  if (auto* i = std::get_if<Interval>(&rep_)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", i->lo, i->hi);
    return buf;
  }
  if (auto* pp = std::get_if<PPower>(&rep_)) {
    return std::to_string(pp->p) + "^(" + to_string(pp->exponent) + ")";
  }
  const auto& r = std::get<Radical>(rep_);
  if (r.root == 1) return to_string(r.base);
  return "(" + to_string(r.base) + ")^(1/" + std::to_string(r.root) + ")";
}

NormValue operator*(const NormValue& a, const NormValue& b) {
  if (a.is_zero() || b.is_zero()) return NormValue::zero();
  if (!a.is_exact() || !b.is_exact()) {
    return interval_product(a.enclosure(), b.enclosure());
  }
  auto* pa = std::get_if<NormValue::PPower>(&a.rep_);
  auto* pb = std::get_if<NormValue::PPower>(&b.rep_);
  if (pa && pb && pa->p == pb->p) return NormValue::p_power(pa->p, pa->exponent + pb->exponent);
  const auto qa = a.rational();
  const auto qb = b.rational();
  if (qa && qb) return NormValue::of(*qa * *qb);
  const NormValue::Radical ra = to_radical(a.rep_);
  const NormValue::Radical rb = to_radical(b.rep_);
  const std::uint64_t l = lcm_u64(ra.root, rb.root);
  const Rational base = rpow(ra.base, static_cast<std::int64_t>(l / ra.root)) *
                        rpow(rb.base, static_cast<std::int64_t>(l / rb.root));
  return NormValue::radical(base, l);
}

NormValue operator+(const NormValue& a, const NormValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_exact() && b.is_exact()) {
    const auto qa = a.rational();
    const auto qb = b.rational();
    if (qa && qb) return NormValue::of(*qa + *qb);
    if ((a <=> b) == 0) return NormValue::of(2) * a;
  }
  const auto ia = a.enclosure();
  const auto ib = b.enclosure();
  return NormValue::interval(std::max(0.0, round_down(ia.lo + ib.lo)), round_up(ia.hi + ib.hi));
}

NormValue operator/(const NormValue& a, const NormValue& b) { return a * pow(b, Rational(-1)); }

std::partial_ordering operator<=>(const NormValue& a, const NormValue& b) {
  if (!a.is_exact() || !b.is_exact()) return compare_intervals(a.enclosure(), b.enclosure());
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::partial_ordering::equivalent;
    return a.is_zero() ? std::partial_ordering::less : std::partial_ordering::greater;
  }
  auto* pa = std::get_if<NormValue::PPower>(&a.rep_);
  auto* pb = std::get_if<NormValue::PPower>(&b.rep_);
  if (pa && pb && pa->p == pb->p) return compare_rational(pa->exponent, pb->exponent);
  const auto qa = a.rational();
  const auto qb = b.rational();
  if (qa && qb) return compare_rational(*qa, *qb);
  // Cheap separation first; exact comparison of integer powers otherwise.
  const auto quick = compare_intervals(a.enclosure(), b.enclosure());
  if (quick != std::partial_ordering::unordered) return quick;
  const NormValue::Radical ra = to_radical(a.rep_);
  const NormValue::Radical rb = to_radical(b.rep_);
  const std::uint64_t l = lcm_u64(ra.root, rb.root);
  return compare_rational(rpow(ra.base, static_cast<std::int64_t>(l / ra.root)),
                          rpow(rb.base, static_cast<std::int64_t>(l / rb.root)));
}

NormValue pow(const NormValue& x, const Rational& e) {
  if (e == 0) return NormValue::one();
  if (x.is_zero()) {
    require(e > 0, Errc::not_invertible, "negative power of a zero norm");
    return NormValue::zero();
  }
  const long a = checked_long(e.get_num());
  const unsigned long c = checked_ulong(e.get_den());
  if (auto* pp = std::get_if<NormValue::PPower>(&x.rep())) return NormValue::p_power(pp->p, pp->exponent * e);
  if (auto* r = std::get_if<NormValue::Radical>(&x.rep())) {
    return NormValue::radical(rpow(r->base, a), r->root * c);
  }
  const auto& i = std::get<NormValue::Interval>(x.rep());
  if (a > 0) {
    return NormValue::interval(double_power_bound(i.lo, a, c, MPFR_RNDD),
                               double_power_bound(i.hi, a, c, MPFR_RNDU));
  }
  return NormValue::interval(double_power_bound(i.hi, a, c, MPFR_RNDD),
                             double_power_bound(i.lo, a, c, MPFR_RNDU));
}

NormValue max(const NormValue& a, const NormValue& b) {
  const auto c = a <=> b;
  if (c == std::partial_ordering::unordered) {
    const auto ia = a.enclosure();
    const auto ib = b.enclosure();
    return NormValue::interval(std::max(ia.lo, ib.lo), std::max(ia.hi, ib.hi));
  }
  return c == std::partial_ordering::less ? b : a;
}

NormValue min(const NormValue& a, const NormValue& b) {
  const auto c = a <=> b;
  if (c == std::partial_ordering::unordered) {
    const auto ia = a.enclosure();
    const auto ib = b.enclosure();
    return NormValue::interval(std::min(ia.lo, ib.lo), std::min(ia.hi, ib.hi));
  }
  return c == std::partial_ordering::greater ? b : a;
}

NormValue widen(const NormValue& x, double rel) {
  const auto i = x.enclosure();
  return NormValue::interval(std::max(0.0, round_down(i.lo * (1.0 - rel))), round_up(i.hi * (1.0 + rel)));
}

}  // namespace wst
