#include "wst/points.hpp"

#include "wst/error.hpp"

namespace wst {

SpectrumPoint SpectrumPoint::arch(const Rational& eps) {
  require(eps > 0 && eps <= 1, Errc::invalid_argument, "archimedean exponent must lie in (0, 1]");
  return {Kind::arch, eps, 0};
}

SpectrumPoint SpectrumPoint::padic(unsigned long p, const Rational& eps) {
  require(is_prime(p), Errc::invalid_argument, "p-adic point needs a prime, got " + std::to_string(p));
  require(eps > 0, Errc::invalid_argument, "p-adic exponent must be positive");
  return {Kind::padic, eps, p};
}

SpectrumPoint SpectrumPoint::padic_residue(unsigned long p) {
  require(is_prime(p), Errc::invalid_argument, "residue point needs a prime, got " + std::to_string(p));
  return {Kind::padic_residue, Rational(1), p};
}

std::string SpectrumPoint::str() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::arch: return "arch(eps=" + to_string(eps) + ")";
    case Kind::padic: return "padic(p=" + std::to_string(p) + ", eps=" + to_string(eps) + ")";
    case Kind::padic_residue: return "padic-residue(p=" + std::to_string(p) + ")";
  }
  return "?";
}

bool compatible(const SpectrumPoint& b, const BaseRing& ring) {
  const RingKind k = ring.kind();
  const bool over_q = k == RingKind::integer_arch || k == RingKind::rational_arch;
  switch (b.kind) {
    case SpectrumPoint::Kind::trivial: return over_q || k == RingKind::trivial_rational;
    case SpectrumPoint::Kind::arch: return over_q || k == RingKind::complex_arch;
    case SpectrumPoint::Kind::padic:
    case SpectrumPoint::Kind::padic_residue: return over_q || (ring.is_padic() && ring.prime() == b.p);
  }
  return false;
}

namespace {

NormValue residue_abs(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x) {
  if (ring.is_padic()) {
    const PAdic& y = std::get<PAdic>(x);
    if (y.is_zero_like()) {
      require(y.is_exact_zero() || y.valuation() >= 1, Errc::precision_exhausted, "residue of " + y.str());
      return NormValue::zero();
    }
    require(y.valuation() >= 0, Errc::unsupported_point, y.str() + " is not " + std::to_string(b.p) + "-integral");
    return y.valuation() > 0 ? NormValue::zero() : NormValue::one();
  }
  const Rational q = ring.to_rational(x);
  if (q == 0) return NormValue::zero();
  const auto v = valuation(q, b.p);
  require(v >= 0, Errc::unsupported_point, to_string(q) + " is not " + std::to_string(b.p) + "-integral");
  return v > 0 ? NormValue::zero() : NormValue::one();
}

NormValue abs_impl(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x, bool bound) {
  require(compatible(b, ring), Errc::unsupported_point, "point " + b.str() + " does not act on " + ring.name());
  switch (b.kind) {
    case SpectrumPoint::Kind::trivial: return ring.is_zero(x) ? NormValue::zero() : NormValue::one();
    case SpectrumPoint::Kind::arch: return pow(ring.norm(x), b.eps);
    case SpectrumPoint::Kind::padic: {
      if (ring.is_padic()) return pow(bound ? ring.norm_bound(x) : ring.norm(x), b.eps);
      const Rational q = ring.to_rational(x);
      if (q == 0) return NormValue::zero();
      return NormValue::p_power(b.p, Rational(-valuation(q, b.p)) * b.eps);
    }
    case SpectrumPoint::Kind::padic_residue: return residue_abs(b, ring, x);
  }
  return NormValue::zero();
}

}  // namespace

NormValue abs_at(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x) {
  return abs_impl(b, ring, x, false);
}

NormValue abs_bound_at(const SpectrumPoint& b, const BaseRing& ring, const RingElement& x) {
  return abs_impl(b, ring, x, true);
}

NormValue evaluate_base(const SpectrumPoint& b, const Integer& n) { return abs_at(b, BaseRing::integers(), n); }

FiberPoint FiberPoint::rational_point(const RingElement& c) {
  FiberPoint x;
  x.kind = Kind::rational;
  x.center = c;
  return x;
}

FiberPoint FiberPoint::disk(const RingElement& c, const Rational& radius) {
  require(radius > 0, Errc::invalid_argument, "disk radius must be positive");
  FiberPoint x;
  x.kind = Kind::disk;
  x.center = c;
  x.radius = radius;
  return x;
}

FiberPoint FiberPoint::rigid(const Polynomial& min_poly) {
  require(min_poly.is_monic() && min_poly.degree() >= 1, Errc::invalid_argument,
          "rigid point needs a monic minimal polynomial of degree >= 1");
  FiberPoint x;
  x.kind = Kind::rigid;
  x.min_poly = min_poly;
  x.center = min_poly.ring().zero();
  return x;
}

std::string FiberPoint::str(const BaseRing& ring) const {
  switch (kind) {
    case Kind::rational: return "rational(" + ring.to_string(center) + ")";
    case Kind::disk: return "disk(" + ring.to_string(center) + ", " + to_string(radius) + ")";
    case Kind::rigid: return "rigid(" + min_poly.str("S") + ")";
  }
  return "?";
}

NormValue evaluate_fiber(const SpectrumPoint& b, const FiberPoint& x, const Polynomial& P) {
  const BaseRing& ring = P.ring();
  switch (x.kind) {
    case FiberPoint::Kind::rational: return abs_at(b, ring, P.eval(x.center));
    case FiberPoint::Kind::disk: {
      require(b.is_ultrametric(), Errc::unsupported_point, "disk points need an ultrametric base point");
      const Polynomial shifted = P.taylor_shift(x.center);
      const NormValue r = NormValue::of(x.radius);
      NormValue best = NormValue::zero();
      NormValue rk = NormValue::one();
      for (int k = 0; k <= shifted.degree(); ++k) {
        best = max(best, abs_at(b, ring, shifted.coeff(static_cast<std::size_t>(k))) * rk);
        rk = rk * r;
      }
      return best;
    }
    case FiberPoint::Kind::rigid: {
      const Polynomial& M = x.min_poly;
      const Polynomial Q = M.ring() == ring ? P : P.change_ring(M.ring());
      const int m = M.degree();
      if (!b.is_ultrametric()) {
        require(m <= 2, Errc::unsupported_point, "archimedean rigid points have degree <= 2");
        if (M.ring().kind() == RingKind::complex_arch) {
          require(m == 1, Errc::unsupported_point, "rigid points over C have degree 1");
        } else if (m == 2) {
          const Rational c1 = M.ring().to_rational(M.coeff(1));
          const Rational c0 = M.ring().to_rational(M.coeff(0));
          require(c1 * c1 - 4 * c0 < 0, Errc::invalid_argument, M.str("S") + " is reducible over R");
        }
      }
      const RingElement res = resultant(M, Q);
      return pow(abs_at(b, M.ring(), res), Rational(1, m));
    }
  }
  return NormValue::zero();
}

const char* rigid_class_name(RigidClass c) {
  switch (c) {
    case RigidClass::thick: return "thick";
    case RigidClass::thin_by_representation: return "thin-by-representation";
    case RigidClass::not_rigid: return "not-rigid";
  }
  return "?";
}

std::optional<Rational> reconstruct_padic(const PAdic& x) {
  if (x.is_exact()) return x.representative();
  if (x.is_zero_like()) return Rational(0);
  const std::int64_t rel = x.relative_precision();
  const Integer m = ipow(Integer(x.prime()), static_cast<unsigned long>(rel));
  const Integer bound = ipow(Integer(x.prime()), static_cast<unsigned long>(rel / 3));
  auto q = rational_reconstruct(x.unit().get_num(), m, bound);
  if (!q) return std::nullopt;
  Rational r = *q * prime_power(x.prime(), x.valuation());
  r.canonicalize();
  return r;
}

RigidClass classify_rigid(const SpectrumPoint&, const FiberPoint& x, const BaseRing& ring) {
  if (x.kind == FiberPoint::Kind::disk) return RigidClass::not_rigid;
  auto exact_enough = [&](const RingElement& c) {
    if (!ring.is_padic()) return true;
    return reconstruct_padic(std::get<PAdic>(c)).has_value();
  };
  if (x.kind == FiberPoint::Kind::rational) {
    return exact_enough(x.center) ? RigidClass::thick : RigidClass::thin_by_representation;
  }
  for (const auto& c : x.min_poly.coeffs()) {
    if (!exact_enough(c)) return RigidClass::thin_by_representation;
  }
  return RigidClass::thick;
}

}  // namespace wst
