#pragma once

// Reference computations for the tests. Everything here works on plain
// GMP rationals, integers and std::complex and shares no code with the
// library's algorithms.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using QPoly = std::vector<mpq_class>;  // low to high, no trailing zeros
using CPoly = std::vector<std::complex<double>>;

QPoly trim(QPoly a);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
QPoly pow(const QPoly& a, unsigned k);
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);
int degree(const QPoly& a);
/// Schoolbook long division over Q.
std::pair<QPoly, QPoly> long_division(const QPoly& a, const QPoly& b);

/// Res(a, b) by the Euclidean recursion Res(a, b) = lc(a)^(deg b - deg r) Res(a, r).
mpq_class resultant(const QPoly& a, const QPoly& b);

/// Characteristic polynomial (monic, degree m) of multiplication by P(S) on
/// Q[S]/(M), by Faddeev-LeVerrier on the companion matrix.
QPoly charpoly_of_value(const QPoly& M, const QPoly& P);

/// p-adic valuation (INT64_MAX for 0).
std::int64_t valuation(const mpq_class& x, unsigned long p);

/// Valuations of the roots of f from its Newton polygon, one entry per root
/// (roots at 0 get INT64_MAX); exact rationals.
std::vector<mpq_class> newton_polygon_root_valuations(const QPoly& f, unsigned long p);

/// All complex roots (Durand-Kerner, then Newton polishing).
std::vector<std::complex<double>> roots(const CPoly& f);
CPoly to_complex(const QPoly& a);
std::complex<double> eval(const CPoly& a, std::complex<double> x);

/// Roots of f mod p by trying every residue.
std::vector<unsigned long> roots_mod_p(const QPoly& f, unsigned long p);
/// Monic irreducible factors of f mod p with multiplicity, by trial division
/// over every monic polynomial of small degree (deg f <= 4).
std::vector<std::pair<std::vector<unsigned long>, int>> factor_mod_p_brute(const QPoly& f, unsigned long p);

/// Plain Newton iteration x <- x - f(x)/f'(x) modulo p^n.
mpz_class newton_root_mod(const QPoly& f, const mpz_class& x0, unsigned long p, unsigned n);

/// |x|_p as a rational.
mpq_class padic_abs(const mpq_class& x, unsigned long p);

}  // namespace oracle
