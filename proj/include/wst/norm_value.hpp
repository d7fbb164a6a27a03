#pragma once

// Real values of norms and seminorms: exact where the arithmetic allows it,
// outward-rounded binary64 intervals otherwise.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "wst/numeric.hpp"

namespace wst {

class NormValue {
 public:
  /// base^(1/root), base >= 0. root == 1 is a plain rational.
  struct Radical {
    Rational base;
    std::uint64_t root = 1;
  };
  /// p^exponent for a prime p.
  struct PPower {
    std::uint64_t p = 2;
    Rational exponent;
  };
  /// Certified enclosure lo <= value <= hi.
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
  };
  using Rep = std::variant<Radical, PPower, Interval>;

  enum class Form { rational, p_power, radical, interval };

  NormValue() : rep_(Radical{Rational(0), 1}) {}

  static NormValue zero() { return NormValue(); }
  static NormValue one() { return of(Rational(1)); }
  static NormValue of(const Rational& q);
  static NormValue of(long n) { return of(Rational(n)); }
  static NormValue p_power(std::uint64_t p, const Rational& exponent);
  static NormValue radical(const Rational& base, std::uint64_t root);
  static NormValue interval(double lo, double hi);

  Form form() const;
  bool is_exact() const { return !std::holds_alternative<Interval>(rep_); }
  /// Certainly zero (exact zero, or the degenerate interval [0, 0]).
  bool is_zero() const;
  /// Exact rational value when the representation has one.
  std::optional<Rational> rational() const;
  Interval enclosure() const;
  double approx() const;
  double upper() const { return enclosure().hi; }
  double lower() const { return enclosure().lo; }
  std::string str() const;
  const Rep& rep() const { return rep_; }

  friend NormValue operator*(const NormValue& a, const NormValue& b);
  friend NormValue operator+(const NormValue& a, const NormValue& b);
  friend NormValue operator/(const NormValue& a, const NormValue& b);
  /// Certified comparison; overlapping intervals are unordered.
  friend std::partial_ordering operator<=>(const NormValue& a, const NormValue& b);
  friend bool operator==(const NormValue& a, const NormValue& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

  NormValue& operator*=(const NormValue& o) { return *this = *this * o; }
  NormValue& operator+=(const NormValue& o) { return *this = *this + o; }

 private:
  explicit NormValue(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// x^e for rational e; x must be nonzero when e < 0.
NormValue pow(const NormValue& x, const Rational& e);
inline NormValue pow(const NormValue& x, long e) { return pow(x, Rational(e)); }
NormValue max(const NormValue& a, const NormValue& b);
NormValue min(const NormValue& a, const NormValue& b);
/// Interval hull of a value, widened by `rel` relative error on both sides.
NormValue widen(const NormValue& x, double rel);

/// Outward-rounded double helpers used by interval code elsewhere.
double round_down(double x);
double round_up(double x);

}  // namespace wst
