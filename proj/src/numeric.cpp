#include "wst/numeric.hpp"

#include <numeric>

#include "wst/error.hpp"

namespace wst {

Rational make_rational(const Integer& n, const Integer& d) {
  require(d != 0, Errc::invalid_argument, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  require(!s.empty(), Errc::malformed_element, "empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    Integer num(s.substr(0, slash), 10);
    Integer den(s.substr(slash + 1), 10);
    require(den != 0, Errc::malformed_element, "zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(Errc::malformed_element, "not a rational literal: '" + s + "'");
  }
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t valuation(const Integer& n, unsigned long p) {
  require(n != 0, Errc::invalid_argument, "valuation of zero");
  Integer rest;
  Integer prime(p);
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t valuation(const Rational& q, unsigned long p) {
  require(q != 0, Errc::invalid_argument, "valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                         ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  require(base != 0, Errc::not_invertible, "negative power of zero");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

Rational prime_power(unsigned long p, std::int64_t k) { return rpow(Rational(Integer(p)), k); }

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    fail(Errc::not_invertible, to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod(r, m);
}

Integer rational_mod(const Rational& q, const Integer& m) {
  return mod(q.get_num() * mod_inverse(q.get_den(), m), m);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  Integer n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
  if (n < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  auto num = exact_root(q.get_num(), k);
  auto den = exact_root(q.get_den(), k);
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m, const Integer& bound) {
  Integer r0 = m, r1 = mod(u, m);
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  return make_rational(r1, t1);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace wst
