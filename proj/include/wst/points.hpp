#pragma once

// Points of the spectrum of Z and of fibers of the affine line over them.

#include <string>

#include "wst/base_ring.hpp"
#include "wst/norm_value.hpp"
#include "wst/polynomial.hpp"

namespace wst {

struct SpectrumPoint {
  enum class Kind { trivial, arch, padic, padic_residue };
  Kind kind = Kind::trivial;
  Rational eps = 1;
  unsigned long p = 0;

  static SpectrumPoint trivial() { return {}; }
  /// |.|_inf^eps, eps in (0, 1].
  static SpectrumPoint arch(const Rational& eps);
  /// |.|_p^eps, eps > 0.
  static SpectrumPoint padic(unsigned long p, const Rational& eps);
  /// Trivial norm on F_p pulled back to Z.
  static SpectrumPoint padic_residue(unsigned long p);

  bool is_ultrametric() const { return kind != Kind::arch; }
  /// Trivial or residue points: norms only take the values 0 and 1.
  bool is_trivially_valued() const { return kind == Kind::trivial || kind == Kind::padic_residue; }
  std::string str() const;
};

NormValue evaluate_base(const SpectrumPoint& b, const Integer& n);

/// |x|_b for an element of a base ring compatible with b (arch points with
/// Z, Q, C; p-adic points with Z, Q, Q_p, Z_p; trivial with Z, Q; residue
/// points with p-integral data). UnsupportedPoint otherwise.
NormValue abs_at(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x);
/// Like abs_at but returns a certified upper bound for O(p^A) elements.
NormValue abs_bound_at(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x);
bool compatible(const SpectrumPoint& b, const BaseRing& ring);

struct FiberPoint {
  enum class Kind { rational, disk, rigid };
  Kind kind = Kind::rational;
  RingElement center;
  Rational radius = 0;
  Polynomial min_poly;

  static FiberPoint rational_point(const RingElement& c);
  static FiberPoint disk(const RingElement& c, const Rational& radius);
  static FiberPoint rigid(const Polynomial& min_poly);
  std::string str(const BaseRing& ring) const;
};

/// |P|_x for x over b. Disk points need ultrametric b; rigid points over an
/// archimedean b need deg(min_poly) <= 2 (irreducible over R).
NormValue evaluate_fiber(const SpectrumPoint& b, const FiberPoint& x, const Polynomial& P);

enum class RigidClass { thick, thin_by_representation, not_rigid };
const char* rigid_class_name(RigidClass c);

/// Representation-driven: exact coefficients (or ones that reconstruct to
/// small rationals) are thick; opaque finite-precision p-adic data is thin.
RigidClass classify_rigid(const SpectrumPoint& b, const FiberPoint& x, const BaseRing& ring);
/// Rational reconstruction of a p-adic coefficient, bound p^(prec/3).
std::optional<Rational> reconstruct_padic(const PAdic& x);

}  // namespace wst
