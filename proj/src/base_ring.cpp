#include "wst/base_ring.hpp"

#include <cmath>
#include <cstdio>

#include "wst/error.hpp"

namespace wst {

namespace {

const PAdic& as_padic(const RingElement& x) { return std::get<PAdic>(x); }

NormValue complex_abs(Complex z) {
  if (z == Complex(0.0, 0.0)) return NormValue::zero();
  if (z.imag() == 0.0) {
    const double a = std::fabs(z.real());
    return NormValue::interval(a, a);
  }
  if (z.real() == 0.0) {
    const double a = std::fabs(z.imag());
    return NormValue::interval(a, a);
  }
  const double h = std::hypot(z.real(), z.imag());
  require(std::isfinite(h), Errc::overflow, "complex modulus overflow");
  return NormValue::interval(std::max(0.0, round_down(round_down(h))), round_up(round_up(h)));
}

}  // namespace

BaseRing BaseRing::padic_field(unsigned long p, std::int64_t precision) {
  require(is_prime(p), Errc::invalid_argument, "p-adic base needs a prime, got " + std::to_string(p));
  require(precision >= 1, Errc::invalid_argument, "p-adic precision must be >= 1");
  return BaseRing(RingKind::padic_field, p, precision);
}

BaseRing BaseRing::padic_dvr(unsigned long p, std::int64_t precision) {
  require(is_prime(p), Errc::invalid_argument, "p-adic base needs a prime, got " + std::to_string(p));
  require(precision >= 1, Errc::invalid_argument, "p-adic precision must be >= 1");
  return BaseRing(RingKind::padic_dvr, p, precision);
}

BaseRing BaseRing::fraction_field() const {
  if (kind_ == RingKind::integer_arch) return rationals();
  if (kind_ == RingKind::padic_dvr) return padic_field(p_, precision_);
  return *this;
}

std::string BaseRing::name() const {
  switch (kind_) {
    case RingKind::integer_arch: return "integer-archimedean";
    case RingKind::rational_arch: return "rational-archimedean";
    case RingKind::complex_arch: return "complex-archimedean";
    case RingKind::trivial_rational: return "trivially-valued-rational";
    case RingKind::padic_field: return "padic-field";
    case RingKind::padic_dvr: return "padic-dvr";
  }
  return "?";
}

RingElement BaseRing::from_rational(const Rational& q_in) const {
  Rational q = q_in;
  q.canonicalize();
  switch (kind_) {
    case RingKind::integer_arch:
      require(is_integer(q), Errc::malformed_element, wst::to_string(q) + " is not an integer");
      return q.get_num();
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return q;
    case RingKind::complex_arch: return Complex(q.get_d(), 0.0);
    case RingKind::padic_dvr:
      require(q == 0 || wst::valuation(q, p_) >= 0, Errc::malformed_element,
              wst::to_string(q) + " is not a " + std::to_string(p_) + "-adic integer");
      [[fallthrough]];
    case RingKind::padic_field: return PAdic::exact(q, p_, precision_);
  }
  return q;
}

RingElement BaseRing::from_complex(Complex z) const {
  require(kind_ == RingKind::complex_arch, Errc::malformed_element, "complex value outside complex ring");
  return z;
}

void BaseRing::check(const RingElement& x) const {
  bool ok = false;
  switch (kind_) {
    case RingKind::integer_arch: ok = std::holds_alternative<Integer>(x); break;
    case RingKind::rational_arch:
    case RingKind::trivial_rational: ok = std::holds_alternative<Rational>(x); break;
    case RingKind::complex_arch: ok = std::holds_alternative<Complex>(x); break;
    case RingKind::padic_field:
    case RingKind::padic_dvr:
      ok = std::holds_alternative<PAdic>(x) && as_padic(x).prime() == p_;
      if (ok && kind_ == RingKind::padic_dvr && !as_padic(x).is_exact_zero()) ok = as_padic(x).valuation() >= 0;
      break;
  }
  require(ok, Errc::malformed_element, "element does not belong to " + name());
}

RingElement BaseRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::integer_arch: return Integer(std::get<Integer>(a) + std::get<Integer>(b));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    case RingKind::complex_arch: return std::get<Complex>(a) + std::get<Complex>(b);
    default: return as_padic(a) + as_padic(b);
  }
}

RingElement BaseRing::neg(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: return Integer(-std::get<Integer>(a));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return Rational(-std::get<Rational>(a));
    case RingKind::complex_arch: return -std::get<Complex>(a);
    default: return -as_padic(a);
  }
}

RingElement BaseRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement BaseRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::integer_arch: return Integer(std::get<Integer>(a) * std::get<Integer>(b));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case RingKind::complex_arch: return std::get<Complex>(a) * std::get<Complex>(b);
    default: return as_padic(a) * as_padic(b);
  }
}

RingElement BaseRing::inv(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: {
      const Integer& n = std::get<Integer>(a);
      require(n == 1 || n == -1, Errc::not_invertible, wst::to_string(n) + " is not a unit of Z");
      return n;
    }
    case RingKind::rational_arch:
    case RingKind::trivial_rational: {
      const Rational& q = std::get<Rational>(a);
      require(q != 0, Errc::not_invertible, "inverse of zero");
      Rational r = 1 / q;
      return r;
    }
    case RingKind::complex_arch: {
      const Complex z = std::get<Complex>(a);
      require(z != Complex(0.0, 0.0), Errc::not_invertible, "inverse of zero");
      return 1.0 / z;
    }
    case RingKind::padic_dvr: {
      const PAdic& x = as_padic(a);
      require(!x.is_exact_zero(), Errc::not_invertible, "inverse of zero");
      require(x.state() == PAdic::State::approx_zero || x.valuation() == 0, Errc::not_invertible,
              x.str() + " is not a unit of Z_" + std::to_string(p_));
      return x.inverse();
    }
    case RingKind::padic_field: return as_padic(a).inverse();
  }
  return a;
}

RingElement BaseRing::pow(const RingElement& a, unsigned long k) const {
  RingElement result = one();
  RingElement base = a;
  while (k > 0) {
    if (k & 1UL) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

bool BaseRing::is_zero(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: return std::get<Integer>(a) == 0;
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return std::get<Rational>(a) == 0;
    case RingKind::complex_arch: return std::get<Complex>(a) == Complex(0.0, 0.0);
    default: return as_padic(a).is_exact_zero();
  }
}

bool BaseRing::is_one(const RingElement& a) const { return equal(a, one()); }

bool BaseRing::equal(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case RingKind::integer_arch: return std::get<Integer>(a) == std::get<Integer>(b);
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return std::get<Rational>(a) == std::get<Rational>(b);
    case RingKind::complex_arch: return std::get<Complex>(a) == std::get<Complex>(b);
    default: return as_padic(a).identical(as_padic(b));
  }
}

NormValue BaseRing::norm(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: return NormValue::of(Rational(abs(std::get<Integer>(a))));
    case RingKind::rational_arch: return NormValue::of(abs(std::get<Rational>(a)));
    case RingKind::trivial_rational: return std::get<Rational>(a) == 0 ? NormValue::zero() : NormValue::one();
    case RingKind::complex_arch: return complex_abs(std::get<Complex>(a));
    default: return as_padic(a).norm();
  }
}

NormValue BaseRing::norm_bound(const RingElement& a) const {
  if (is_padic()) {
    check(a);
    return as_padic(a).norm_bound();
  }
  return norm(a);
}

Rational BaseRing::to_rational(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: return Rational(std::get<Integer>(a));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return std::get<Rational>(a);
    case RingKind::complex_arch: {
      const Complex z = std::get<Complex>(a);
      require(z.imag() == 0.0, Errc::invalid_argument, "complex value is not real");
      return Rational(z.real());
    }
    default: return as_padic(a).representative();
  }
}

Complex BaseRing::to_complex(const RingElement& a) const {
  if (kind_ == RingKind::complex_arch) {
    check(a);
    return std::get<Complex>(a);
  }
  require(!is_padic(), Errc::incompatible_norm_kind, "p-adic element has no complex value");
  return Complex(to_rational(a).get_d(), 0.0);
}

std::string BaseRing::to_string(const RingElement& a) const {
  check(a);
  switch (kind_) {
    case RingKind::integer_arch: return wst::to_string(std::get<Integer>(a));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return wst::to_string(std::get<Rational>(a));
    case RingKind::complex_arch: {
      char buf[80];
      const Complex z = std::get<Complex>(a);
      std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", z.real(), z.imag());
      return buf;
    }
    default: return as_padic(a).str();
  }
}

UniformityReport uniformity_check(const BaseRing& ring, const std::vector<RingElement>& samples, int max_power) {
  UniformityReport report;
  report.max_power = max_power;
  for (const auto& x : samples) {
    const NormValue n = ring.norm(x);
    RingElement xk = x;
    for (int k = 1; k <= max_power; ++k) {
      if (k > 1) xk = ring.mul(xk, x);
      const NormValue lhs = ring.norm(xk);
      const NormValue rhs = pow(n, static_cast<long>(k));
      if (lhs.is_exact() && rhs.is_exact()) {
        if (lhs != rhs) {
          report.uniform = false;
          const double r = rhs.approx();
          report.worst_deviation = std::max(report.worst_deviation, r == 0.0 ? 1.0 : std::fabs(lhs.approx() / r - 1.0));
        }
        continue;
      }
      const double r = rhs.approx();
      const double dev = r == 0.0 ? (lhs.approx() == 0.0 ? 0.0 : 1.0) : std::fabs(lhs.approx() / r - 1.0);
      report.worst_deviation = std::max(report.worst_deviation, dev);
      if (dev > 1e-12) report.uniform = false;
    }
  }
  return report;
}

RingElement random_element(const BaseRing& ring, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, std::max(1L, bound));
  switch (ring.kind()) {
    case RingKind::integer_arch: return Integer(num(rng));
    case RingKind::rational_arch:
    case RingKind::trivial_rational: return make_rational(Integer(num(rng)), Integer(den(rng)));
    case RingKind::complex_arch: {
      std::uniform_real_distribution<double> u(-static_cast<double>(bound), static_cast<double>(bound));
      return Complex(u(rng), u(rng));
    }
    default: {
      std::uniform_int_distribution<int> shift(0, 2);
      Rational q(num(rng));
      q *= prime_power(ring.prime(), shift(rng));
      return ring.from_rational(q);
    }
  }
}

}  // namespace wst
