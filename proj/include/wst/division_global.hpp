#pragma once

// Division by a monic polynomial in A<|T| <= w>, and the quotient algebra
// A[T]/(G) with its residue and coordinate norms.

#include <random>

#include "wst/norm_value.hpp"
#include "wst/polynomial.hpp"
#include "wst/series.hpp"

namespace wst {

/// Class in A[T]/(G), stored as the canonical representative of degree < d.
class QuotientElement {
 public:
  QuotientElement() = default;
  QuotientElement(MonicPolynomial modulus, const Polynomial& representative);

  const MonicPolynomial& modulus() const { return modulus_; }
  const BaseRing& ring() const { return modulus_.ring(); }
  int degree() const { return modulus_.degree(); }
  /// Coordinate i of the canonical representative, 0 <= i < d.
  RingElement coord(int i) const { return rep_.coeff(static_cast<std::size_t>(i)); }
  const Polynomial& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  QuotientElement scaled(const RingElement& c) const;

 private:
  MonicPolynomial modulus_;
  Polynomial rep_;
};

struct DivisionConstants {
  NormValue v;    // 1 + sum ||g_k||
  NormValue rho;  // sum ||g_k|| w^k / w^d
  NormValue C;    // (1 + ||G||_w / w^d) / (1 - rho)
};

NormValue threshold_v(const MonicPolynomial& G);
/// RadiusTooSmall when w < v.
DivisionConstants division_constants(const MonicPolynomial& G, const Rational& w);

struct DivisionCertificate {
  Series Q;
  Series R;  // degree < d, tail included
  Rational w;
  NormValue v;
  NormValue C;
  NormValue rho;
  NormValue norm_F;
  NormValue norm_Q;
  NormValue norm_R;
};

/// F = Q G + R on F's window with deg R < d; the bounds
/// ||Q||_w, ||R||_w <= C ||F||_w are verified before returning.
DivisionCertificate divide_global(const Series& F, const MonicPolynomial& G, const Rational& w);

/// Sum w-norm of a polynomial.
NormValue poly_norm(const Polynomial& p, const Rational& w);

struct ResidueNormBracket {
  NormValue upper;           // w-norm of the canonical representative
  NormValue lower_estimate;  // smallest w-norm among sampled representatives
  std::size_t trials = 0;
};

ResidueNormBracket residue_norm(const QuotientElement& F, const Rational& w, std::size_t trials,
                                std::mt19937_64& rng);

/// Max of the coordinate norms.
NormValue div_norm(const QuotientElement& F);

struct SandwichReport {
  NormValue div;
  NormValue canonical_norm;
  NormValue C;
  std::size_t samples = 0;
  std::size_t violations = 0;           // representatives with div > C * ||rep||_w
  bool canonical_dominates_div = true;  // div <= ||canonical||_w
};

SandwichReport sandwich_check(const QuotientElement& F, const Rational& w, const NormValue& C, std::size_t samples,
                              std::mt19937_64& rng);

/// Random polynomial of degree <= deg with coefficients from random_element.
Polynomial random_polynomial(const BaseRing& ring, int deg, std::mt19937_64& rng, long bound);

}  // namespace wst
