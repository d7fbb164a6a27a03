#pragma once

// Arbitrary-precision integer and rational helpers on top of gmpxx.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wst {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational n/d (d != 0).
Rational make_rational(const Integer& n, const Integer& d);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
/// Exact ceiling/floor of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// p-adic valuation; the argument must be nonzero.
std::int64_t valuation(const Integer& n, unsigned long p);
std::int64_t valuation(const Rational& q, unsigned long p);

Integer ipow(const Integer& base, unsigned long exponent);
/// base^exponent, exponent of either sign (base != 0 when exponent < 0).
Rational rpow(const Rational& base, std::int64_t exponent);
/// p^k as a rational, k of either sign.
Rational prime_power(unsigned long p, std::int64_t k);

/// Least nonnegative residue.
Integer mod(const Integer& a, const Integer& m);
/// Inverse of a modulo m; throws Error(not_invertible) when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);
/// Image of a p-integral rational in Z/mZ.
Integer rational_mod(const Rational& q, const Integer& m);

bool is_prime(unsigned long p);

/// k-th root of n when n is a perfect k-th power (n >= 0).
std::optional<Integer> exact_root(const Integer& n, unsigned long k);
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

/// Rational a/b with |a|, |b| <= bound and a == b*u mod m, if one exists.
/// Half-extended Euclid on (m, u); unique when 2*bound^2 < m.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m, const Integer& bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace wst
