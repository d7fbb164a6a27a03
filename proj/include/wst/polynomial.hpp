#pragma once

// Dense univariate polynomials over a BaseRing, coefficients low to high.

#include <string>
#include <vector>

#include "wst/base_ring.hpp"

namespace wst {

class Polynomial {
 public:
  Polynomial() : ring_(BaseRing::rationals()) {}
  explicit Polynomial(BaseRing ring) : ring_(std::move(ring)) {}
  Polynomial(BaseRing ring, std::vector<RingElement> coeffs);

  static Polynomial from_rationals(const BaseRing& ring, const std::vector<Rational>& coeffs);
  static Polynomial constant(const BaseRing& ring, const RingElement& c);
  static Polynomial monomial(const BaseRing& ring, const RingElement& c, std::size_t k);
  /// The variable itself.
  static Polynomial x(const BaseRing& ring) { return monomial(ring, ring.one(), 1); }

  const BaseRing& ring() const { return ring_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RingElement coeff(std::size_t k) const;
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  RingElement leading() const;
  bool is_monic() const;
  bool equal(const Polynomial& o) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const RingElement& c) const;

  RingElement eval(const RingElement& x) const;
  Polynomial derivative() const;
  /// this(inner(T)).
  Polynomial compose(const Polynomial& inner) const;
  /// this(T + c).
  Polynomial taylor_shift(const RingElement& c) const;
  Polynomial pow(unsigned long k) const;
  /// Remainder modulo T^n.
  Polynomial truncated(std::size_t n) const;
  /// Same coefficients viewed in another ring (via rationals or complexes).
  Polynomial change_ring(const BaseRing& target) const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  BaseRing ring_;
  std::vector<RingElement> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by a monic polynomial; works over any ring.
DivRem divrem_monic(const Polynomial& f, const Polynomial& g);
/// Division over a field (leading coefficient of g invertible).
DivRem divrem(const Polynomial& f, const Polynomial& g);
/// Monic gcd over a field.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtGcd {
  Polynomial g;  // monic gcd
  Polynomial s;  // s*a + t*b = g
  Polynomial t;
};
ExtGcd extgcd(const Polynomial& a, const Polynomial& b);

/// Sylvester-determinant resultant, computed over the fraction field and
/// mapped back. Res(A, B) = lc(A)^deg B * prod B(alpha) over roots of A.
RingElement resultant(const Polynomial& a, const Polynomial& b);

class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  explicit MonicPolynomial(Polynomial p);
  /// T^d + lower[d-1] T^(d-1) + ... + lower[0].
  static MonicPolynomial from_lower(const BaseRing& ring, std::vector<RingElement> lower);

  const Polynomial& poly() const { return poly_; }
  const BaseRing& ring() const { return poly_.ring(); }
  int degree() const { return poly_.degree(); }
  /// Coefficient of T^k (1 at k = degree).
  RingElement coeff(std::size_t k) const { return poly_.coeff(k); }

 private:
  Polynomial poly_;
};

}  // namespace wst
