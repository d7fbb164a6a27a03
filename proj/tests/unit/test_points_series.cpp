#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wst/error.hpp"
#include "wst/points.hpp"
#include "wst/series.hpp"

using namespace wst;

TEST_SUITE("points") {
  TEST_CASE("base points on integers") {
    CHECK(evaluate_base(SpectrumPoint::arch(Rational(1, 2)), Integer(4)) == NormValue::of(2));
    CHECK(evaluate_base(SpectrumPoint::padic(7, 1), Integer(14)) == NormValue::of(Rational(1, 7)));
    CHECK(evaluate_base(SpectrumPoint::padic_residue(7), Integer(21)).is_zero());
    CHECK(evaluate_base(SpectrumPoint::padic_residue(7), Integer(22)) == NormValue::one());
    CHECK_THROWS_AS(SpectrumPoint::arch(Rational(3, 2)), Error);
  }
  TEST_CASE("fiber points") {
    const BaseRing Q = BaseRing::rationals();
    const Polynomial p = Polynomial::from_rationals(Q, {1, 7});
    CHECK(evaluate_fiber(SpectrumPoint::padic(7, 1), FiberPoint::disk(Q.zero(), 1), p) == NormValue::one());
    const Polynomial m = Polynomial::from_rationals(Q, {-2, 0, 1});
    const NormValue v = evaluate_fiber(SpectrumPoint::padic(2, 1), FiberPoint::rigid(m), Polynomial::x(Q));
    CHECK(v == NormValue::radical(Rational(1, 2), 2));
    const NormValue a = evaluate_fiber(SpectrumPoint::arch(1), FiberPoint::rigid(Polynomial::from_rationals(Q, {2, 0, 1})),
                                       Polynomial::x(Q));
    CHECK(std::abs(a.approx() - std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(evaluate_fiber(SpectrumPoint::arch(1), FiberPoint::rigid(m), Polynomial::x(Q)), Error);
    CHECK(evaluate_fiber(SpectrumPoint::padic(7, 1), FiberPoint::rational_point(Q.from_integer(14)), p) ==
          NormValue::one());
  }
  TEST_CASE("rigid classification") {
    const BaseRing Q = BaseRing::rationals();
    const Polynomial m = Polynomial::from_rationals(Q, {-2, 0, 1});
    CHECK(classify_rigid(SpectrumPoint::padic(7, 1), FiberPoint::rigid(m), Q) == RigidClass::thick);
    CHECK(classify_rigid(SpectrumPoint::trivial(), FiberPoint::disk(Q.zero(), 1), Q) == RigidClass::not_rigid);
    const BaseRing Q7 = BaseRing::padic_field(7, 30);
    const Integer root = oracle::newton_root_mod({-2, 0, 1}, 3, 7, 30);
    const RingElement alpha = PAdic::approx(Rational(root), 30, 7, 30);
    const Polynomial lin(Q7, {Q7.neg(alpha), Q7.one()});
    CHECK(classify_rigid(SpectrumPoint::padic(7, 1), FiberPoint::rigid(lin), Q7) == RigidClass::thin_by_representation);
  }
}

TEST_SUITE("series") {
  TEST_CASE("norms") {
    const BaseRing Z = BaseRing::integers();
    const Series f(Z, 0, {Integer(1), Integer(2)}, Rational(0), Rational(3));
    CHECK(series_norm(f, NormKind::sum) == NormValue::of(7));
    const BaseRing Q = BaseRing::rationals();
    const Series g(Q, -1, {Q.one(), Q.zero(), Q.one()}, Rational(1, 2), Rational(2));
    CHECK(series_norm(g, NormKind::sum) == NormValue::of(4));
    const BaseRing Q7 = BaseRing::padic_field(7, 20);
    const Series h(Q7, -1, {Q7.one(), Q7.zero(), Q7.one()}, Rational(1, 2), Rational(2));
    CHECK(series_norm(h, NormKind::ultrametric_max) == NormValue::of(2));
  }
  TEST_CASE("products") {
    const BaseRing Z = BaseRing::integers();
    const Series a(Z, 0, {Integer(1), Integer(1)}, Rational(0), Rational(1));
    const Series b(Z, 0, {Integer(1), Integer(-1)}, Rational(0), Rational(1));
    const Series c = mul(a, b, std::make_pair(0L, 2L));
    CHECK(c.to_polynomial().equal(Polynomial::from_rationals(Z, {1, 0, -1})));
    CHECK(c.tail().is_zero());
    const Series u(Z, -1, {Integer(1)}, Rational(1, 2), Rational(2)), t(Z, 1, {Integer(1)}, Rational(1, 2), Rational(2));
    const Series one = u * t;
    CHECK(Z.equal(one.coeff(0), Integer(1)));
    CHECK(one.tail().is_zero());
  }
  TEST_CASE("products match direct convolution") {
    std::mt19937_64 rng(21);
    const BaseRing Q = BaseRing::rationals();
    for (int i = 0; i < 10; ++i) {
      std::vector<RingElement> a, b;
      oracle::QPoly qa, qb;
      for (int k = 0; k <= 10; ++k) {
        a.push_back(random_element(Q, rng, 9));
        b.push_back(random_element(Q, rng, 9));
        qa.push_back(Q.to_rational(a.back()));
        qb.push_back(Q.to_rational(b.back()));
      }
      const Series c = Series(Q, 0, a, Rational(0), Rational(1)) * Series(Q, 0, b, Rational(0), Rational(1));
      const auto want = oracle::mul(qa, qb);
      for (std::size_t k = 0; k < want.size(); ++k) CHECK(Q.to_rational(c.coeff(static_cast<long>(k))) == want[k]);
    }
  }
  TEST_CASE("sup bracket and coefficient bound") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1, 1);
    const BaseRing C = BaseRing::complexes();
    for (int i = 0; i < 10; ++i) {
      std::vector<RingElement> c;
      for (int k = 0; k <= 8; ++k) c.push_back(Complex(u(rng), 0.0));
      const Series f(C, 0, c, Rational(1, 2), Rational(2));
      const SupBracket br = sup_bracket(f, 4096);
      CHECK(br.lower <= br.upper);
      CHECK(br.upper <= series_norm(f, NormKind::sum));
      CHECK(sup_bracket(f, 4096, false).upper.upper() == br.upper.upper());
      CHECK(coefficient_bound_check(f, Rational(3, 4), Rational(3, 2), br).holds);
    }
  }
  TEST_CASE("pi content") {
    const BaseRing Z7 = BaseRing::padic_dvr(7, 20);
    const Series f(Z7, 0, {Z7.zero(), Z7.from_integer(7), Z7.from_integer(49)}, Rational(0), Rational(1));
    const PiContent pc = pi_content(f);
    CHECK(pc.v == 1);
    CHECK(Z7.to_rational(pc.g.coeff(1)) == 1);
    CHECK(Z7.to_rational(pc.g.coeff(2)) == 7);
    const PiContent three = pi_content(Series(Z7, 0, {Z7.from_integer(3)}, Rational(0), Rational(1)));
    CHECK(three.v == 0);
    CHECK_THROWS_AS(pi_content(Series::zero(Z7, Rational(0), Rational(1))), Error);
  }
}
