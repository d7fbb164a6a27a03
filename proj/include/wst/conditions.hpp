#pragma once

// Root bounds, the resultant condition on finite boundaries, Gauss points of
// disks and annuli, and empirical tests of the spectral-norm condition.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wst/division_global.hpp"
#include "wst/points.hpp"
#include "wst/polynomial.hpp"

namespace wst {

struct BoundaryPoint {
  SpectrumPoint base;
  std::optional<FiberPoint> fiber;
  std::string str(const BaseRing& ring) const;
};

using AnalyticBoundary = std::vector<BoundaryPoint>;

enum class Verdict { satisfied, satisfied_empirically, violated, inconclusive };
const char* verdict_name(Verdict v);

struct ConditionReport {
  std::string condition;  // "R_G", "N_G"
  Verdict verdict = Verdict::inconclusive;
  std::optional<NormValue> m_U;       // R_G: min |Res(G, G')| over the boundary
  std::optional<NormValue> constant;  // N_G: max div_norm / spectral estimate
  std::size_t samples = 0;
  std::optional<Polynomial> witness;  // N_G: nilpotent class
  std::optional<NormValue> witness_estimate;
  std::string detail;
};

/// max(1, sum_k |g_k|_b) over the non-leading coefficients.
NormValue root_bound(const MonicPolynomial& G, const SpectrumPoint& b);

/// |P|_x where x is a boundary point; base points read P's constant term.
NormValue evaluate_boundary(const BoundaryPoint& x, const Polynomial& P);

ConditionReport check_RG(const MonicPolynomial& G, const AnalyticBoundary& gamma);

/// Gauss points of the disk |T| <= outer (inner == 0) or of the annulus
/// inner <= |T| <= outer. UnsupportedArchimedean over arch points.
AnalyticBoundary shilov_point(const SpectrumPoint& b, const Rational& inner, const Rational& outer);

/// div_norm(F^(2^k))^(1/2^k).
NormValue spectral_seminorm(const QuotientElement& F, int k_max = 6);

ConditionReport estimate_NG(const MonicPolynomial& G, const Rational& w, std::size_t samples, std::mt19937_64& rng,
                            int k_max = 6);

}  // namespace wst
