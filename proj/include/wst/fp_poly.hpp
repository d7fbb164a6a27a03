#pragma once

// Polynomials over F_p (p < 2^63) and their factorization: square-free
// decomposition, distinct-degree and Cantor-Zassenhaus equal-degree splitting.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wst/numeric.hpp"

namespace wst::fp {

using Poly = std::vector<std::uint64_t>;  // low to high, no trailing zeros

Poly trim(Poly a);
int degree(const Poly& a);
Poly from_integers(std::uint64_t p, const std::vector<Integer>& c);
Poly add(std::uint64_t p, const Poly& a, const Poly& b);
Poly sub(std::uint64_t p, const Poly& a, const Poly& b);
Poly mul(std::uint64_t p, const Poly& a, const Poly& b);
Poly scale(std::uint64_t p, const Poly& a, std::uint64_t c);
std::pair<Poly, Poly> divrem(std::uint64_t p, const Poly& a, const Poly& b);
Poly mod(std::uint64_t p, const Poly& a, const Poly& m);
Poly monic(std::uint64_t p, const Poly& a);
Poly gcd(std::uint64_t p, Poly a, Poly b);
/// s a + t b = gcd (monic).
struct Bezout {
  Poly g, s, t;
};
Bezout extgcd(std::uint64_t p, const Poly& a, const Poly& b);
Poly derivative(std::uint64_t p, const Poly& a);
Poly powmod(std::uint64_t p, Poly base, const Integer& e, const Poly& m);
std::uint64_t inv(std::uint64_t p, std::uint64_t a);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<Poly, int>> factor(std::uint64_t p, const Poly& f, std::mt19937_64& rng);

}  // namespace wst::fp
