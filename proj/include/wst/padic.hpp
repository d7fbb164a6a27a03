#pragma once

// p-adic numbers with precision tracking. An element is either exact (a
// rational number viewed in Q_p) or known modulo p^N, stored as
// p^val * unit with unit an integer modulo p^rel.

#include <cstdint>
#include <limits>
#include <string>

#include "wst/norm_value.hpp"
#include "wst/numeric.hpp"

namespace wst {

class PAdic {
 public:
  enum class State { exact_zero, exact, approx, approx_zero };
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

  PAdic() = default;

  static PAdic zero(unsigned long p, std::int64_t cap);
  static PAdic exact(const Rational& q, unsigned long p, std::int64_t cap);
  /// The element known modulo p^abs_prec whose residue is represented by q
  /// (q must be p-integral when abs_prec > valuation(q)).
  static PAdic approx(const Rational& q, std::int64_t abs_prec, unsigned long p, std::int64_t cap);
  /// p^val * unit with `rel` certified unit digits.
  static PAdic from_parts(std::int64_t val, const Integer& unit, std::int64_t rel, unsigned long p,
                          std::int64_t cap);

  State state() const { return state_; }
  unsigned long prime() const { return p_; }
  std::int64_t cap() const { return cap_; }
  bool is_exact() const { return state_ == State::exact || state_ == State::exact_zero; }
  bool is_exact_zero() const { return state_ == State::exact_zero; }
  /// No certified nonzero digit (exact zero or O(p^A)).
  bool is_zero_like() const { return state_ == State::exact_zero || state_ == State::approx_zero; }
  /// Valuation; for approx_zero this is the absolute precision A.
  std::int64_t valuation() const;
  /// Number of certified digits after the leading one; kInfinite when exact.
  std::int64_t relative_precision() const;
  /// Digits known modulo p^N; kInfinite when exact.
  std::int64_t absolute_precision() const;
  /// Unit part: a p-unit rational (exact) or an integer in [0, p^rel) (approx).
  const Rational& unit() const { return unit_; }
  /// A rational representative of the element (0 for zero-like elements).
  Rational representative() const;
  /// Least nonnegative residue modulo p^n; needs valuation >= 0 and enough digits.
  Integer residue(std::int64_t n) const;

  /// |x|_p; PrecisionExhausted for approx_zero.
  NormValue norm() const;
  /// Certified upper bound on |x|_p (p^{-A} for O(p^A)).
  NormValue norm_bound() const;

  PAdic operator-() const;
  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  PAdic inverse() const;
  /// Forgets digits beyond absolute precision `abs`.
  PAdic truncated_abs(std::int64_t abs) const;

  /// Same state and same data (not a p-adic equality test).
  bool identical(const PAdic& o) const;
  std::string str() const;

 private:
  State state_ = State::exact_zero;
  unsigned long p_ = 2;
  std::int64_t cap_ = 20;
  std::int64_t val_ = 0;
  std::int64_t rel_ = kInfinite;
  Rational unit_ = 0;
};

}  // namespace wst
