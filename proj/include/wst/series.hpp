#pragma once

// Truncated Laurent series on an annulus inner <= |T| <= outer with a
// certified bound on everything outside the stored window.

#include <optional>
#include <string>
#include <vector>

#include "wst/base_ring.hpp"
#include "wst/norm_value.hpp"
#include "wst/polynomial.hpp"

namespace wst {

enum class NormKind { sum, ultrametric_max };

/// s < t, or s == 0.
bool precedes(const Rational& s, const Rational& t);

/// max(s^n, t^n), with the disk convention 0^0 = 1.
NormValue weight(long n, const Rational& s, const Rational& t);

class Series {
 public:
  Series() = default;
  /// coeffs[i] is the coefficient of T^(lo + i). `tail` bounds the sum norm
  /// of all omitted terms at the given radii.
  Series(BaseRing ring, long lo, std::vector<RingElement> coeffs, Rational inner, Rational outer,
         NormValue tail = NormValue::zero());

  static Series from_polynomial(const Polynomial& p, const Rational& outer);
  static Series zero(const BaseRing& ring, const Rational& inner, const Rational& outer);
  /// c * T^k.
  static Series monomial(const BaseRing& ring, const RingElement& c, long k, const Rational& inner,
                         const Rational& outer);

  const BaseRing& ring() const { return ring_; }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  /// Coefficient of T^n (zero outside the window).
  RingElement coeff(long n) const;
  const Rational& inner() const { return inner_; }
  const Rational& outer() const { return outer_; }
  const NormValue& tail() const { return tail_; }
  bool is_disk() const { return inner_ == 0; }
  /// Every stored coefficient is exactly zero.
  bool window_is_zero() const;

  Series with_tail(const NormValue& tail) const;
  /// Same terms viewed on a sub-annulus [inner, outer] of the current one.
  Series restricted(const Rational& inner, const Rational& outer) const;
  /// Terms of degree > hi move into the tail.
  Series truncated(long hi) const;
  /// Stored window widened (with zeros) to cover [lo, hi].
  Series widened(long lo, long hi) const;
  Polynomial to_polynomial() const;
  /// Sum over the window at x (ignores the tail).
  RingElement eval(const RingElement& x) const;
  std::string str(const std::string& var = "T") const;

 private:
  BaseRing ring_;
  long lo_ = 0;
  std::vector<RingElement> coeffs_;
  Rational inner_ = 0;
  Rational outer_ = 1;
  NormValue tail_;
};

NormValue series_norm(const Series& f, NormKind kind);
/// Norm at radii [s, t] inside the series' annulus.
NormValue norm_at(const Series& f, NormKind kind, const Rational& s, const Rational& t);
/// Norm of the stored window only (no tail).
NormValue window_norm(const Series& f, NormKind kind, const Rational& s, const Rational& t);

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series scale(const Series& f, const RingElement& c);
/// Product on the common annulus; terms outside `keep` = [lo, hi] are
/// charged to the tail.
Series mul(const Series& f, const Series& g, std::optional<std::pair<long, long>> keep = std::nullopt);
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

struct SupBracket {
  NormValue lower;
  NormValue upper;
};

/// Certified bracket on sup |f| over the closed annulus. Ultrametric rings:
/// the Gauss norm. Complex/real rings: samples on the boundary circles plus
/// rounding and Lipschitz allowances.
SupBracket sup_bracket(const Series& f, std::size_t grid = 4096, bool parallel = true);

struct CoefficientBoundReport {
  bool holds = false;
  NormValue lhs;     // ||f||_{u,v}
  NormValue factor;  // s/(u-s) + t/(t-v)
  NormValue rhs;     // factor * bracket.upper
  SupBracket bracket;
};

CoefficientBoundReport coefficient_bound_check(const Series& f, const Rational& u, const Rational& v,
                                               const SupBracket& bracket);

struct PiContent {
  long v = 0;
  Series g;
};

/// f = p^v g over a p-adic DVR with g containing a unit coefficient.
PiContent pi_content(const Series& f);

}  // namespace wst
