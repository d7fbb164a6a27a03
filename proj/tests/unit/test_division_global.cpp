#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wst/division_global.hpp"
#include "wst/error.hpp"

using namespace wst;

namespace {

oracle::QPoly as_q(const Polynomial& p) {
  oracle::QPoly out;
  for (const auto& c : p.coeffs()) out.push_back(p.ring().to_rational(c));
  return oracle::trim(out);
}

}  // namespace

TEST_SUITE("division_global") {
  TEST_CASE("T^3 by T^2 - 1") {
    const BaseRing Z = BaseRing::integers();
    const MonicPolynomial G(Polynomial::from_rationals(Z, {-1, 0, 1}));
    const Series F(Z, 0, {Integer(0), Integer(0), Integer(0), Integer(1)}, Rational(0), Rational(3));
    const DivisionCertificate c = divide_global(F, G, Rational(3));
    CHECK(as_q(c.Q.to_polynomial()) == oracle::QPoly{0, 1});
    CHECK(as_q(c.R.to_polynomial()) == oracle::QPoly{0, 1});
    CHECK(c.v == NormValue::of(2));
  }
  TEST_CASE("low degree F is its own remainder") {
    const BaseRing Z = BaseRing::integers();
    const MonicPolynomial G(Polynomial::from_rationals(Z, {1, 1, 0, 1}));
    const Series F(Z, 0, {Integer(4), Integer(5)}, Rational(0), Rational(4));
    const DivisionCertificate c = divide_global(F, G, Rational(4));
    CHECK(c.Q.window_is_zero());
    CHECK(as_q(c.R.to_polynomial()) == oracle::QPoly{4, 5});
  }
  TEST_CASE("radius below threshold is rejected") {
    const BaseRing Z = BaseRing::integers();
    const MonicPolynomial G(Polynomial::from_rationals(Z, {-1, 0, 1}));
    CHECK_THROWS_AS(division_constants(G, Rational(3, 2)), Error);
  }
  TEST_CASE("matches long division over Q") {
    std::mt19937_64 rng(31);
    const BaseRing Q = BaseRing::rationals();
    const MonicPolynomial G(Polynomial::from_rationals(Q, {1, 2, 0, 1}));
    for (int i = 0; i < 20; ++i) {
      const Polynomial f = random_polynomial(Q, 10, rng, 9);
      const DivisionCertificate c = divide_global(Series::from_polynomial(f, Rational(5)), G, Rational(5));
      const auto [q, r] = oracle::long_division(as_q(f), as_q(G.poly()));
      CHECK(as_q(c.Q.to_polynomial()) == q);
      CHECK(as_q(c.R.to_polynomial()) == r);
    }
  }
  TEST_CASE("quotient norms") {
    const BaseRing Z = BaseRing::integers();
    const MonicPolynomial T2(Polynomial::from_rationals(Z, {0, 0, 1}));
    const QuotientElement f(T2, Polynomial::from_rationals(Z, {1, 1}));
    CHECK(poly_norm(f.representative(), Rational(2)) == NormValue::of(3));
    CHECK(div_norm(f) == NormValue::one());
    CHECK(div_norm(QuotientElement(T2, Polynomial(Z))).is_zero());
    const MonicPolynomial G(Polynomial::from_rationals(Z, {-1, 0, 1}));
    CHECK(QuotientElement(G, G.poly()).is_zero());
    CHECK(div_norm(QuotientElement(G, Polynomial::from_rationals(Z, {3, 5}))) == NormValue::of(5));
  }
  TEST_CASE("residue bracket and sandwich") {
    std::mt19937_64 rng(32);
    const BaseRing Q = BaseRing::rationals();
    const MonicPolynomial G(Polynomial::from_rationals(Q, {-1, 0, 1}));
    const Rational w(4);
    const NormValue C = division_constants(G, w).C;
    std::size_t violations = 0;
    for (int i = 0; i < 100; ++i) {
      const QuotientElement f(G, random_polynomial(Q, 1, rng, 9));
      const ResidueNormBracket br = residue_norm(f, w, 20, rng);
      CHECK(br.lower_estimate <= br.upper);
      const SandwichReport rep = sandwich_check(f, w, C, 5, rng);
      violations += rep.violations;
      CHECK(rep.canonical_dominates_div);
    }
    CHECK(violations == 0);
  }
}
