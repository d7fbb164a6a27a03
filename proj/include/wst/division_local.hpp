#pragma once

// Division and preparation at a rigid point x of a fiber. Functions near x
// are modelled on the lemniscate |P_eps(S)| <= r as A<|T| <= r>[S]/(P_eps(S) - T),
// truncated at T-degree N.

#include <optional>
#include <vector>

#include "wst/points.hpp"
#include "wst/polynomial.hpp"
#include "wst/series.hpp"

namespace wst {

struct LocalContext {
  SpectrumPoint b;
  BaseRing ring;  // field of definition of the data
  Polynomial P;   // minimal polynomial of x as given
  MonicPolynomial P_eps;
  NormValue eps;  // ||P_eps - P||_inf
  RigidClass cls = RigidClass::thick;
  Rational r = 1;
  Rational s = Rational(1, 2);
  long window = 24;  // T-degrees 0..window are kept
  /// Unset: chosen from the ring and the data. Relative to the input norm over C.
  std::optional<NormValue> tau_zero;
  std::optional<NormValue> tol;
  NormValue D = NormValue::one();
  int max_iter = 200;

  int degree() const { return P_eps.degree(); }
};

struct LocalOptions {
  Rational r = 1;
  Rational s = Rational(1, 2);
  long window = 24;
  std::optional<NormValue> tol;
  std::optional<NormValue> tau_zero;
  std::optional<NormValue> D;
  int max_iter = 200;
  /// Treat all data as exact (tolerance and zero threshold exactly 0).
  bool exact_data = false;
};

/// `x` must be a rigid point with monic minimal polynomial over `ring`.
/// b must use exponent 1. Rings: C (arch), Q or Z (arch or trivial), Q_p/Z_p.
LocalContext make_local_context(const SpectrumPoint& b, const FiberPoint& x, const BaseRing& ring,
                                const LocalOptions& opt = {});

/// Element of A[T]/(T^(N+1))[S]/(P_eps(S) - T).
class LocalElement {
 public:
  LocalElement() = default;
  LocalElement(const LocalContext& ctx, std::vector<std::vector<RingElement>> coords);

  static LocalElement zero(const LocalContext& ctx);
  static LocalElement one(const LocalContext& ctx);
  /// P_eps-adic expansion of f; InvalidArgument if deg f needs more than N T-degrees.
  static LocalElement from_polynomial(const LocalContext& ctx, const Polynomial& f);

  const BaseRing& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()); }
  long window() const { return window_; }
  const RingElement& at(int i, long j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// S^i coordinate as a series in T on |T| <= r.
  Series coord(int i, const Rational& outer) const;
  bool is_zero() const;
  /// sum_{i,j} c_ij S^i P_eps(S)^j.
  Polynomial to_polynomial() const;

  friend LocalElement operator+(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator-(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator*(const LocalElement& a, const LocalElement& b);
  LocalElement scaled(const RingElement& c) const;
  /// Terms of T-degree >= n, divided by T^n.
  LocalElement high_part(long n) const;
  /// Terms of T-degree < n.
  LocalElement low_part(long n) const;
  /// Multiplied by T^n (truncated at the window).
  LocalElement shifted_up(long n) const;

 private:
  BaseRing ring_;
  Polynomial modulus_;  // P_eps
  long window_ = 0;
  std::vector<std::vector<RingElement>> c_;  // c_[i][j]: S^i T^j
};

/// Coordinate norm at T-radius s: max over i of the T-series norm of c_i
/// (Gauss norm over ultrametric rings, sum norm otherwise).
NormValue local_norm(const LocalElement& f, const LocalContext& ctx);

/// Multiplicativity constant of local_norm at the context's s.
NormValue local_product_constant(const LocalContext& ctx);

/// P-adic valuation of the fiber image of G; FiberZero when the image is
/// indistinguishable from 0.
long fiber_valuation(const LocalElement& G, const LocalContext& ctx);

struct UnitInverse {
  LocalElement K;
  NormValue defect;  // ||K G - P_eps^n||
  NormValue budget;
  int iterations = 0;
};

UnitInverse unit_inverse_K(const LocalElement& G, long n, const LocalContext& ctx);

struct LocalDivisionResult {
  LocalElement Q;
  Polynomial R;
  long n = 0;
  LocalElement K;
  NormValue theta;
  NormValue C_hat;
  int iterations = 0;
  NormValue residual;
  std::vector<NormValue> residual_log;
};

/// Q is determined modulo T^(N+1-n) only; its top n T-degrees are returned as 0.
LocalDivisionResult divide_local(const LocalElement& F, const LocalElement& G, const LocalContext& ctx);

struct Preparation {
  MonicPolynomial Omega;
  LocalElement E;
  LocalElement E_inv;
  long n = 0;
  NormValue omega_deviation;  // max coefficient norm of Omega - P^n
  NormValue residual;         // ||G E_inv - Omega||
  LocalDivisionResult division;
};

Preparation prepare(const LocalElement& G, const LocalContext& ctx);

/// Newton reciprocal u^-1 on the window, seeded from the inverse of u mod (P_eps, T).
/// NotAUnit when the seed does not exist.
LocalElement local_inverse(const LocalElement& u, const LocalContext& ctx);

}  // namespace wst
