#include "wst/padic.hpp"

#include <algorithm>

#include "wst/error.hpp"

namespace wst {

namespace {

Integer pk(unsigned long p, std::int64_t k) { return ipow(Integer(p), static_cast<unsigned long>(k)); }

void check_same_prime(const PAdic& a, const PAdic& b) {
  require(a.prime() == b.prime(), Errc::malformed_element, "p-adic operands over different primes");
}

}  // namespace

PAdic PAdic::zero(unsigned long p, std::int64_t cap) {
  PAdic z;
  z.p_ = p;
  z.cap_ = cap;
  return z;
}

PAdic PAdic::exact(const Rational& q, unsigned long p, std::int64_t cap) {
  PAdic x = zero(p, cap);
  if (q == 0) return x;
  x.state_ = State::exact;
  x.val_ = wst::valuation(q, p);
  x.unit_ = q / prime_power(p, x.val_);
  x.unit_.canonicalize();
  return x;
}

PAdic PAdic::approx(const Rational& q, std::int64_t abs_prec, unsigned long p, std::int64_t cap) {
  PAdic x = zero(p, cap);
  if (q == 0 || wst::valuation(q, p) >= abs_prec) {
    x.state_ = State::approx_zero;
    x.val_ = abs_prec;
    return x;
  }
  const std::int64_t v = wst::valuation(q, p);
  const std::int64_t rel = std::min(abs_prec - v, cap);
  Rational u = q / prime_power(p, v);
  u.canonicalize();
  return from_parts(v, rational_mod(u, pk(p, rel)), rel, p, cap);
}

PAdic PAdic::from_parts(std::int64_t val, const Integer& unit, std::int64_t rel, unsigned long p,
                        std::int64_t cap) {
  require(rel >= 1, Errc::malformed_element, "p-adic relative precision must be positive");
  const Integer m = pk(p, rel);
  const Integer u = mod(unit, m);
  require(u % p != 0, Errc::malformed_element, "p-adic unit part divisible by p");
  PAdic x = zero(p, cap);
  x.state_ = State::approx;
  x.val_ = val;
  x.rel_ = std::min(rel, cap);
  x.unit_ = Rational(mod(u, pk(p, x.rel_)));
  return x;
}

std::int64_t PAdic::valuation() const {
  require(state_ != State::exact_zero, Errc::invalid_argument, "valuation of exact p-adic zero");
  return val_;
}

std::int64_t PAdic::relative_precision() const {
  switch (state_) {
    case State::exact:
    case State::exact_zero: return kInfinite;
    case State::approx: return rel_;
    case State::approx_zero: return 0;
  }
  return 0;
}

std::int64_t PAdic::absolute_precision() const {
  switch (state_) {
    case State::exact:
    case State::exact_zero: return kInfinite;
    case State::approx: return val_ + rel_;
    case State::approx_zero: return val_;
  }
  return 0;
}

Rational PAdic::representative() const {
  if (is_zero_like()) return Rational(0);
  Rational r = unit_ * prime_power(p_, val_);
  r.canonicalize();
  return r;
}

Integer PAdic::residue(std::int64_t n) const {
  if (n <= 0 || state_ == State::exact_zero) return Integer(0);
  require(absolute_precision() >= n, Errc::precision_exhausted,
          "residue mod p^" + std::to_string(n) + " needs more digits than " + str());
  if (state_ == State::approx_zero) return Integer(0);
  require(val_ >= 0, Errc::not_invertible, "residue of a non-integral p-adic number");
  return rational_mod(representative(), pk(p_, n));
}

NormValue PAdic::norm() const {
  if (state_ == State::exact_zero) return NormValue::zero();
  require(state_ != State::approx_zero, Errc::precision_exhausted,
          "norm of O(" + std::to_string(p_) + "^" + std::to_string(val_) + ") is not certified");
  return NormValue::p_power(p_, Rational(-val_));
}

NormValue PAdic::norm_bound() const {
  if (state_ == State::exact_zero) return NormValue::zero();
  return NormValue::p_power(p_, Rational(-val_));
}

PAdic PAdic::operator-() const {
  PAdic r = *this;
  if (state_ == State::exact) r.unit_ = -unit_;
  if (state_ == State::approx) r.unit_ = Rational(mod(-unit_.get_num(), pk(p_, rel_)));
  return r;
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  check_same_prime(a, b);
  const std::int64_t cap = std::max(a.cap_, b.cap_);
  if (a.is_exact() && b.is_exact()) return PAdic::exact(a.representative() + b.representative(), a.p_, cap);
  const std::int64_t abs = std::min(a.absolute_precision(), b.absolute_precision());
  return PAdic::approx(a.representative() + b.representative(), abs, a.p_, cap);
}

PAdic operator*(const PAdic& a, const PAdic& b) {
  check_same_prime(a, b);
  const std::int64_t cap = std::max(a.cap_, b.cap_);
  if (a.is_exact_zero() || b.is_exact_zero()) return PAdic::zero(a.p_, cap);
  if (a.is_exact() && b.is_exact()) return PAdic::exact(a.representative() * b.representative(), a.p_, cap);
  // Absolute precision of a product: each factor's error scaled by the
  // other's size.
  const std::int64_t v = a.val_ + b.val_;
  if (a.state_ == PAdic::State::approx_zero || b.state_ == PAdic::State::approx_zero) {
    PAdic z = PAdic::zero(a.p_, cap);
    z.state_ = PAdic::State::approx_zero;
    z.val_ = v;
    return z;
  }
  const std::int64_t rel = std::min(a.relative_precision(), b.relative_precision());
  return PAdic::approx(a.representative() * b.representative(), v + rel, a.p_, cap);
}

PAdic PAdic::inverse() const {
  require(state_ != State::exact_zero, Errc::not_invertible, "inverse of p-adic zero");
  require(state_ != State::approx_zero, Errc::precision_exhausted, "inverse of " + str());
  if (state_ == State::exact) return exact(1 / representative(), p_, cap_);
  const Integer m = pk(p_, rel_);
  return from_parts(-val_, mod_inverse(unit_.get_num(), m), rel_, p_, cap_);
}

PAdic PAdic::truncated_abs(std::int64_t abs) const {
  if (absolute_precision() <= abs) return *this;
  return approx(representative(), abs, p_, cap_);
}

bool PAdic::identical(const PAdic& o) const {
  return state_ == o.state_ && p_ == o.p_ && (state_ == State::exact_zero || val_ == o.val_) &&
         (state_ != State::approx || rel_ == o.rel_) && unit_ == o.unit_;
}

std::string PAdic::str() const {
  const std::string p = std::to_string(p_);
  switch (state_) {
    case State::exact_zero: return "0";
    case State::approx_zero: return "O(" + p + "^" + std::to_string(val_) + ")";
    case State::exact: return to_string(unit_) + "*" + p + "^" + std::to_string(val_);
    case State::approx:
      return to_string(unit_) + "*" + p + "^" + std::to_string(val_) + " + O(" + p + "^" +
             std::to_string(val_ + rel_) + ")";
  }
  return "?";
}

}  // namespace wst
