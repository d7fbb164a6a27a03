#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "wst/norm_value.hpp"
#include "wst/numeric.hpp"
#include "wst/padic.hpp"

namespace wst {

enum class RingKind { integer_arch, rational_arch, complex_arch, padic_field, padic_dvr, trivial_rational };

using Complex = std::complex<double>;
using RingElement = std::variant<Integer, Rational, Complex, PAdic>;

class BaseRing {
 public:
  BaseRing() = default;

  static BaseRing integers() { return BaseRing(RingKind::integer_arch, 0, 0); }
  static BaseRing rationals() { return BaseRing(RingKind::rational_arch, 0, 0); }
  static BaseRing complexes() { return BaseRing(RingKind::complex_arch, 0, 0); }
  static BaseRing trivial_rationals() { return BaseRing(RingKind::trivial_rational, 0, 0); }
  static BaseRing padic_field(unsigned long p, std::int64_t precision);
  static BaseRing padic_dvr(unsigned long p, std::int64_t precision);

  RingKind kind() const { return kind_; }
  unsigned long prime() const { return p_; }
  std::int64_t precision() const { return precision_; }
  bool is_padic() const { return kind_ == RingKind::padic_field || kind_ == RingKind::padic_dvr; }
  bool is_ultrametric() const { return is_padic() || kind_ == RingKind::trivial_rational; }
  bool is_field() const { return kind_ != RingKind::integer_arch && kind_ != RingKind::padic_dvr; }
  /// Element arithmetic never rounds (integers, rationals, trivially valued).
  bool is_exact() const { return !is_padic() && kind_ != RingKind::complex_arch; }
  BaseRing fraction_field() const;
  std::string name() const;
  bool operator==(const BaseRing& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && precision_ == o.precision_;
  }

  RingElement zero() const { return from_rational(Rational(0)); }
  RingElement one() const { return from_rational(Rational(1)); }
  RingElement from_integer(long n) const { return from_rational(Rational(n)); }
  /// MalformedElement when q does not live in the ring (non-integer over Z,
  /// negative valuation over Z_p).
  RingElement from_rational(const Rational& q) const;
  RingElement from_complex(Complex z) const;

  /// Throws MalformedElement if the payload does not belong to this ring.
  void check(const RingElement& x) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement inv(const RingElement& a) const;
  RingElement pow(const RingElement& a, unsigned long k) const;

  /// Exactly zero (polynomial trimming); O(p^A) is not exactly zero.
  bool is_zero(const RingElement& a) const;
  bool is_one(const RingElement& a) const;
  /// Payload equality (exact kinds: value equality).
  bool equal(const RingElement& a, const RingElement& b) const;

  NormValue norm(const RingElement& a) const;
  /// Upper bound on the norm that never fails (O(p^A) gives p^-A).
  NormValue norm_bound(const RingElement& a) const;

  /// Image in Q when the element is exactly rational.
  Rational to_rational(const RingElement& a) const;
  Complex to_complex(const RingElement& a) const;
  std::string to_string(const RingElement& a) const;

 private:
  BaseRing(RingKind kind, unsigned long p, std::int64_t precision) : kind_(kind), p_(p), precision_(precision) {}

  RingKind kind_ = RingKind::rational_arch;
  unsigned long p_ = 0;
  std::int64_t precision_ = 0;
};

struct UniformityReport {
  bool uniform = true;
  /// max |norm(x^k) / norm(x)^k - 1| observed, as a double.
  double worst_deviation = 0.0;
  int max_power = 8;
};

UniformityReport uniformity_check(const BaseRing& ring, const std::vector<RingElement>& samples,
                                  int max_power = 8);

/// Random element of moderate size: integers in [-bound, bound], rationals
/// with denominators up to bound, p-adic integers times small p-powers.
RingElement random_element(const BaseRing& ring, std::mt19937_64& rng, long bound);

}  // namespace wst
