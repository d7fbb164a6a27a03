#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wst/points.hpp"
#include "wst/polynomial.hpp"

namespace wst {

struct HenselProblem {
  BaseRing ring;  // p-adic DVR
  Polynomial P;
  RingElement f0;
  /// Contraction constant in (|P(f0)|, 1); defaults to (|P(f0)| + 1) / 2.
  std::optional<NormValue> K;
  Rational ostrowski_lambda = 0;
};

struct HenselStep {
  int step = 0;
  /// v_p(P(h_k)), i.e. P(h_k) = 0 mod p^this.
  std::int64_t certified_precision = 0;
  NormValue contraction_lhs;  // ||R(g_k)||
  NormValue contraction_rhs;  // K ||g_k||
  bool contraction_ok = true;
};

struct HenselResult {
  PAdic h;
  NormValue K;
  std::vector<HenselStep> log;
};

/// Newton iteration to a root of P congruent to f0, correct mod p^target.
HenselResult hensel_lift(const HenselProblem& prob, std::int64_t target_precision);

struct FactorizationDG {
  std::vector<Polynomial> factors;            // monic, integer coefficients in [0, p^N)
  std::vector<std::vector<Integer>> residues;  // irreducible residue factor h_i mod p (low to high)
  std::vector<int> multiplicities;
  std::int64_t precision = 0;
  NormValue residual;  // |G - prod H_i|_p, coefficientwise max
};

/// Lifts the residue factorization of G into coprime irreducible powers to
/// precision p^N. G needs p-integral coefficients.
FactorizationDG factor_DG(const MonicPolynomial& G, const SpectrumPoint& b, std::int64_t precision,
                          std::uint64_t seed = 1);

}  // namespace wst
