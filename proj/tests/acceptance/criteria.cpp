#include "criteria.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "wst/conditions.hpp"
#include "wst/division_global.hpp"
#include "wst/division_local.hpp"
#include "wst/endo_checks.hpp"
#include "wst/error.hpp"
#include "wst/hensel.hpp"
#include "wst/series.hpp"

namespace acceptance {

namespace {

using namespace wst;
using oracle::QPoly;

QPoly to_q(const Polynomial& p) {
  QPoly out;
  for (const auto& c : p.coeffs()) out.push_back(p.ring().to_rational(c));
  return oracle::trim(out);
}

QPoly to_q(const Series& f) {
  QPoly out(static_cast<std::size_t>(std::max(0L, f.hi() + 1)));
  for (long n = std::max(0L, f.lo()); n <= f.hi(); ++n) out[static_cast<std::size_t>(n)] = f.ring().to_rational(f.coeff(n));
  return oracle::trim(out);
}

mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

mpq_class abs_at_oracle(const mpq_class& x, unsigned long p) { return p == 0 ? mpq_class(abs(x)) : oracle::padic_abs(x, p); }

mpq_class w_norm_oracle(const QPoly& a, const mpq_class& w, unsigned long p) {
  mpq_class acc = 0, wk = 1;
  for (const auto& c : a) {
    acc += abs_at_oracle(c, p) * wk;
    wk *= w;
  }
  return acc;
}

mpq_class as_rational_upper(const NormValue& v) {
  if (auto q = v.rational()) return *q;
  return mpq_class(v.upper());
}

struct GlobalStats {
  std::size_t cases = 0;
  std::size_t exact_failures = 0;
  std::size_t degree_failures = 0;
  std::size_t certificate_violations = 0;
  std::size_t idempotence_failures = 0;
  std::size_t idempotence_cases = 0;
  double seconds = 0.0;
  std::string first_problem;
};

const GlobalStats& global_runs(std::uint64_t seed) {
  static std::optional<GlobalStats> cached;
  static std::uint64_t cached_seed = 0;
  if (cached && cached_seed == seed) return *cached;
  GlobalStats st;
  std::mt19937_64 rng(seed);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<BaseRing, unsigned long>> rings = {
      {BaseRing::integers(), 0}, {BaseRing::padic_field(2, 40), 2}, {BaseRing::padic_field(7, 40), 7}};
  for (const auto& [R, p] : rings) {
    for (int run = 0; run < 200; ++run) {
      std::uniform_int_distribution<int> deg(1, 5);
      const int d = deg(rng);
      std::vector<RingElement> lower;
      for (int k = 0; k < d; ++k) lower.push_back(random_element(R, rng, 9));
      const MonicPolynomial G = MonicPolynomial::from_lower(R, lower);
      const mpq_class v = *threshold_v(G).rational();
      const mpq_class w = v + 1;
      std::uniform_int_distribution<int> len(1, 40);
      std::vector<RingElement> fc;
      const int L = len(rng);
      for (int k = 0; k < L; ++k) fc.push_back(random_element(R, rng, 50));
      const Series F(R, 0, fc, Rational(0), w);
      ++st.cases;
      const DivisionCertificate cert = divide_global(F, G, w);
      const QPoly q = to_q(cert.Q), r = to_q(cert.R), f = to_q(F), g = to_q(G.poly());
      const QPoly diff = oracle::sub(f, oracle::add(oracle::mul(q, g), r));
      if (!diff.empty()) {
        ++st.exact_failures;
        if (st.first_problem.empty()) st.first_problem = "inexact division over " + R.name();
      }
      if (oracle::degree(r) >= d) ++st.degree_failures;
      const mpq_class C = as_rational_upper(cert.C);
      const mpq_class nf = w_norm_oracle(f, w, p);
      if (w_norm_oracle(q, w, p) > C * nf || w_norm_oracle(r, w, p) > C * nf) ++st.certificate_violations;

      const Series Rs(R, 0, cert.R.coeffs(), Rational(0), w);
      const DivisionCertificate again = divide_global(Rs, G, w);
      ++st.idempotence_cases;
      if (!again.Q.window_is_zero() || to_q(again.R) != r) ++st.idempotence_failures;
    }
  }
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  cached = st;
  cached_seed = seed;
  return *cached;
}

Outcome c1_global_exactness(std::uint64_t seed) {
  const GlobalStats& st = global_runs(seed);
  std::ostringstream os;
  os << st.cases << " divisions, " << st.exact_failures << " inexact, " << st.degree_failures
     << " with deg R >= d, " << st.seconds << " s";
  if (!st.first_problem.empty()) os << "; " << st.first_problem;
  return {1, "global division exactness", st.exact_failures == 0 && st.degree_failures == 0 && st.seconds < 10.0,
          os.str()};
}

Outcome c2_certificate(std::uint64_t seed) {
  const GlobalStats& st = global_runs(seed);
  std::ostringstream os;
  os << st.certificate_violations << " violations of ||Q||_w, ||R||_w <= C ||F||_w in " << st.cases << " runs";
  return {2, "certificate soundness", st.certificate_violations == 0, os.str()};
}

Outcome c3_idempotence(std::uint64_t seed) {
  const GlobalStats& st = global_runs(seed);
  std::ostringstream os;
  os << st.idempotence_failures << " failures in " << st.idempotence_cases << " re-divisions of R";
  return {3, "uniqueness and idempotence", st.idempotence_failures == 0 && st.idempotence_cases >= 200, os.str()};
}

Outcome c4_hensel(std::uint64_t) {
  const auto t0 = std::chrono::steady_clock::now();
  const BaseRing R = BaseRing::padic_dvr(7, 40);
  HenselProblem prob{R, Polynomial::from_rationals(R, {-2, 0, 1}), R.from_integer(3), std::nullopt, 0};
  const HenselResult res = hensel_lift(prob, 40);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 7, 40);
  const mpz_class h = res.h.residue(40);
  const bool root = (h * h - 2) % m == 0;
  const bool mod49 = h % 49 == 10;
  const bool oracle_match = h == oracle::newton_root_mod({-2, 0, 1}, 3, 7, 40);
  bool doubling = true;
  bool contraction = true;
  for (std::size_t k = 0; k < res.log.size(); ++k) {
    contraction = contraction && res.log[k].contraction_ok;
    if (k >= 2 && k + 1 < res.log.size()) {
      doubling = doubling && res.log[k + 1].certified_precision >= 2 * res.log[k].certified_precision;
    }
  }
  std::ostringstream os;
  os << "h^2 = 2 mod 7^40: " << root << ", h = 10 mod 49: " << mod49 << ", oracle agrees: " << oracle_match
     << ", precisions:";
  for (const auto& s : res.log) os << ' ' << s.certified_precision;
  os << ", " << secs << " s";
  return {4, "Hensel lifting", root && mod49 && oracle_match && doubling && contraction && secs < 1.0, os.str()};
}

Outcome c5_factor_dg(std::uint64_t) {
  const BaseRing Z = BaseRing::integers();
  const SpectrumPoint b = SpectrumPoint::padic(7, 1);
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 7, 30);
  std::ostringstream os;
  bool ok = true;
  {
    const MonicPolynomial G(Polynomial::from_rationals(Z, {-2, 0, 1}));
    const FactorizationDG f = factor_DG(G, b, 30);
    std::set<unsigned long> roots;
    QPoly prod{1};
    bool linear = f.factors.size() == 2;
    for (const auto& H : f.factors) {
      linear = linear && H.degree() == 1 && H.is_monic();
      for (auto r : oracle::roots_mod_p(to_q(H), 7)) roots.insert(r);
      prod = oracle::mul(prod, to_q(H));
    }
    const QPoly diff = oracle::sub(prod, {-2, 0, 1});
    bool congruent = true;
    for (const auto& c : diff) congruent = congruent && c.get_den() == 1 && c.get_num() % m == 0;
    const auto brute = oracle::factor_mod_p_brute({-2, 0, 1}, 7);
    std::vector<std::pair<std::vector<unsigned long>, int>> lib;
    for (std::size_t i = 0; i < f.residues.size(); ++i) {
      std::vector<unsigned long> r;
      for (const auto& c : f.residues[i]) r.push_back(c.get_ui());
      lib.emplace_back(r, f.multiplicities[i]);
    }
    std::sort(lib.begin(), lib.end());
    const bool residues_ok = roots == std::set<unsigned long>{3, 4} && lib == brute;
    ok = ok && linear && congruent && residues_ok;
    os << "T^2-2: " << f.factors.size() << " factors, residues ok " << residues_ok << ", product = G mod 7^30 "
       << congruent;
  }
  {
    const MonicPolynomial G(Polynomial::from_rationals(Z, {1, 0, 1}));
    const FactorizationDG f = factor_DG(G, b, 30);
    const bool single = f.factors.size() == 1 && oracle::factor_mod_p_brute({1, 0, 1}, 7).size() == 1;
    bool same = single;
    if (single) {
      const QPoly d = oracle::sub(to_q(f.factors[0]), {1, 0, 1});
      for (const auto& c : d) same = same && c.get_num() % m == 0;
    }
    ok = ok && single && same;
    os << "; T^2+1: r = " << f.factors.size();
  }
  return {5, "residue factorization lifting", ok, os.str()};
}

Outcome c6_local_division(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  std::size_t failures = 0, runs = 0, decay_failures = 0;
  double worst_complex = 0.0;
  std::string first;
  // Complex, P = S.
  {
    const BaseRing C = BaseRing::complexes();
    LocalOptions opt;
    opt.window = 24;
    const LocalContext ctx = make_local_context(SpectrumPoint::arch(1), FiberPoint::rigid(Polynomial::x(C)), C, opt);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> nd(0, 3), fd(0, 10);
    for (int run = 0; run < 50; ++run) {
      const int n = nd(rng);
      const Complex c0(1.0 + std::abs(u(rng)), u(rng));
      const Complex a1(u(rng) / 2.0, u(rng) / 2.0), a2(u(rng) / 2.0, u(rng) / 2.0);
      // G = S^n c0 (1 + a1 S)(1 + a2 S) / |.| bounded so the unit part has no zero in |S| <= 2.
      Polynomial unit(C, {c0, c0 * (a1 + a2) / 2.0, c0 * a1 * a2 / 4.0});
      const Polynomial G = Polynomial::monomial(C, C.one(), static_cast<std::size_t>(n)) * unit;
      std::vector<RingElement> fcoef;
      const int df = fd(rng);
      for (int k = 0; k <= df; ++k) fcoef.push_back(Complex(u(rng), u(rng)));
      const Polynomial F(C, fcoef);
      ++runs;
      const LocalDivisionResult res =
          divide_local(LocalElement::from_polynomial(ctx, F), LocalElement::from_polynomial(ctx, G), ctx);
      // Oracle residual: F - (Q G + R) as series in S modulo S^25, sum norm at s.
      std::vector<std::complex<double>> e(25, 0.0);
      for (int j = 0; j <= 24; ++j) {
        if (j <= F.degree()) e[j] += std::get<Complex>(F.coeff(static_cast<std::size_t>(j)));
        if (j <= res.R.degree()) e[j] -= std::get<Complex>(res.R.coeff(static_cast<std::size_t>(j)));
        for (int k = 0; k <= j && k <= G.degree(); ++k) {
          e[j] -= std::get<Complex>(res.Q.at(0, j - k)) * std::get<Complex>(G.coeff(static_cast<std::size_t>(k)));
        }
      }
      double norm = 0.0, sj = 1.0, fnorm = 0.0;
      for (int j = 0; j <= 24; ++j, sj *= 0.5) {
        norm += std::abs(e[j]) * sj;
        if (j <= F.degree()) fnorm += std::abs(std::get<Complex>(F.coeff(static_cast<std::size_t>(j)))) * sj;
      }
      worst_complex = std::max(worst_complex, norm);
      const bool deg_ok = res.R.degree() < n;
      if (norm > 1e-9 || !deg_ok || res.residual.upper() > 1e-9) {
        ++failures;
        if (first.empty()) first = "complex run " + std::to_string(run);
      }
      const double floor = 1e-12 * std::max(1.0, fnorm);
      for (std::size_t k = 0; k + 1 < res.residual_log.size(); ++k) {
        if (res.residual_log[k + 1].lower() > res.theta.upper() * res.residual_log[k].upper() + floor) ++decay_failures;
      }
    }
  }
  // 7-adic, thick P = S^2 - 2.
  {
    const BaseRing Q7 = BaseRing::padic_field(7, 40);
    LocalOptions opt;
    opt.window = 12;
    opt.s = Rational(1, 7);
    const Polynomial P = Polynomial::from_rationals(Q7, {-2, 0, 1});
    const LocalContext ctx = make_local_context(SpectrumPoint::padic(7, 1), FiberPoint::rigid(P), Q7, opt);
    std::uniform_int_distribution<int> nd(0, 2), fd(0, 8), coef(-20, 20), unitc(1, 6);
    const QPoly Pq{-2, 0, 1};
    const QPoly mod = oracle::pow(Pq, 13);
    for (int run = 0; run < 50; ++run) {
      const int n = nd(rng);
      const Polynomial unit = Polynomial::from_rationals(Q7, {unitc(rng), 7 * coef(rng), 7 * coef(rng)});
      const Polynomial G = P.pow(static_cast<unsigned long>(n)) * unit;
      std::vector<Rational> fcoef;
      const int df = fd(rng);
      for (int k = 0; k <= df; ++k) fcoef.emplace_back(coef(rng));
      const Polynomial F = Polynomial::from_rationals(Q7, fcoef);
      ++runs;
      const LocalDivisionResult res =
          divide_local(LocalElement::from_polynomial(ctx, F), LocalElement::from_polynomial(ctx, G), ctx);
      // Oracle: F - (Q G + R) = 0 modulo P^13 over Q, with Q expanded as sum q_ij S^i P^j.
      QPoly Qs;
      QPoly Pj{1};
      for (long j = 0; j <= 12; ++j) {
        QPoly layer;
        for (int i = 0; i < 2; ++i) layer.push_back(Q7.to_rational(res.Q.at(i, j)));
        Qs = oracle::add(Qs, oracle::mul(oracle::trim(layer), Pj));
        Pj = oracle::mul(Pj, Pq);
      }
      const QPoly E = oracle::sub(to_q(F), oracle::add(oracle::mul(Qs, to_q(G)), to_q(res.R)));
      const bool exact = oracle::long_division(E, mod).second.empty() && res.residual.is_zero();
      const bool deg_ok = res.R.degree() < 2 * n;
      if (!exact || !deg_ok) {
        ++failures;
        if (first.empty()) first = "7-adic run " + std::to_string(run);
      }
      for (std::size_t k = 0; k + 1 < res.residual_log.size(); ++k) {
        if (!(res.residual_log[k + 1] <= res.theta * res.residual_log[k])) ++decay_failures;
      }
    }
  }
  std::ostringstream os;
  os << runs << " runs, " << failures << " failures, " << decay_failures << " decay violations, worst complex residual "
     << worst_complex;
  if (!first.empty()) os << "; first failure: " << first;
  return {6, "local division", failures == 0 && decay_failures == 0, os.str()};
}

Outcome c7_preparation(std::uint64_t) {
  std::ostringstream os;
  bool ok = true;
  {
    const BaseRing Q7 = BaseRing::padic_field(7, 40);
    LocalOptions opt;
    opt.window = 12;
    opt.s = Rational(1, 7);
    const Polynomial P = Polynomial::from_rationals(Q7, {-2, 0, 1});
    const LocalContext ctx = make_local_context(SpectrumPoint::padic(7, 1), FiberPoint::rigid(P), Q7, opt);
    const Polynomial unit = Polynomial::from_rationals(Q7, {1, 7});
    const Preparation prep = prepare(LocalElement::from_polynomial(ctx, P * unit), ctx);
    const bool omega = to_q(prep.Omega.poly()) == QPoly{-2, 0, 1};
    const LocalElement diff = prep.E - LocalElement::from_polynomial(ctx, unit);
    const NormValue dn = diff.is_zero() ? NormValue::zero() : local_norm(diff, ctx);
    const bool e_ok = dn <= NormValue::p_power(7, Rational(-20));
    ok = ok && omega && e_ok;
    os << "7-adic: Omega = " << prep.Omega.poly().str("S") << ", ||E - (1+7S)|| = " << dn.str();
  }
  {
    const BaseRing C = BaseRing::complexes();
    const LocalContext ctx = make_local_context(SpectrumPoint::arch(1), FiberPoint::rigid(Polynomial::x(C)), C);
    const Polynomial G = Polynomial::from_rationals(C, {0, 0, 1, 1});
    const Preparation prep = prepare(LocalElement::from_polynomial(ctx, G), ctx);
    double om = 0.0;
    const std::vector<Complex> want{0.0, 0.0, 1.0};
    for (int k = 0; k <= std::max(2, prep.Omega.degree()); ++k) {
      const Complex c = k <= prep.Omega.degree() ? std::get<Complex>(prep.Omega.coeff(static_cast<std::size_t>(k))) : 0.0;
      om = std::max(om, std::abs(c - (k < 3 ? want[static_cast<std::size_t>(k)] : 0.0)));
    }
    double ed = 0.0;
    for (long j = 0; j <= prep.E.window(); ++j) {
      const Complex target = j == 0 || j == 1 ? Complex(1.0) : Complex(0.0);
      ed = std::max(ed, std::abs(std::get<Complex>(prep.E.at(0, j)) - target));
    }
    ok = ok && prep.Omega.degree() == 2 && om <= 1e-10 && ed <= 1e-10;
    os << "; complex: Omega error " << om << ", E error " << ed;
  }
  return {7, "preparation", ok, os.str()};
}

Outcome c8_rigid(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 8);
  const BaseRing Q = BaseRing::rationals();
  std::uniform_int_distribution<int> small(-5, 5), deg4(0, 4), deg3(0, 3), mdeg(1, 3), pos(1, 9);
  std::size_t arch_fail = 0, padic_fail = 0;
  double worst = 0.0;
  for (int run = 0; run < 50; ++run) {
    QPoly M;
    if (run % 2 == 0) {
      M = {small(rng), 1};
    } else {
      const mpq_class b = small(rng);
      M = {b * b / 4 + mpq_class(pos(rng), 4), b, 1};
    }
    QPoly P;
    const int dp = deg4(rng);
    for (int k = 0; k <= dp; ++k) P.push_back(frac(small(rng), pos(rng)));
    P = oracle::trim(P);
    if (P.empty()) P = {1};
    std::vector<Rational> mq(M.begin(), M.end()), pq(P.begin(), P.end());
    const NormValue lib = evaluate_fiber(SpectrumPoint::arch(1), FiberPoint::rigid(Polynomial::from_rationals(Q, mq)),
                                         Polynomial::from_rationals(Q, pq));
    double brute = 0.0;
    for (const auto& a : oracle::roots(oracle::to_complex(M))) brute = std::max(brute, std::abs(oracle::eval(oracle::to_complex(P), a)));
    const double err = std::abs(lib.approx() - brute) / std::max(1.0, brute);
    worst = std::max(worst, err);
    if (err > 1e-9) ++arch_fail;
  }
  int done = 0;
  while (done < 50) {
    const int m = mdeg(rng);
    QPoly M;
    for (int k = 0; k < m; ++k) M.push_back(small(rng));
    M.push_back(1);
    if (m >= 2 && !oracle::roots_mod_p(M, 7).empty()) continue;
    QPoly P;
    const int dp = deg3(rng);
    for (int k = 0; k <= dp; ++k) P.push_back(frac(small(rng) * (k % 2 ? 7 : 1), pos(rng)));
    P = oracle::trim(P);
    if (P.empty()) continue;
    const QPoly chi = oracle::charpoly_of_value(M, P);
    if (chi[0] == 0) continue;
    const auto vals = oracle::newton_polygon_root_valuations(chi, 7);
    ++done;
    std::vector<Rational> mq(M.begin(), M.end()), pq(P.begin(), P.end());
    const NormValue lib = evaluate_fiber(SpectrumPoint::padic(7, 1), FiberPoint::rigid(Polynomial::from_rationals(Q, mq)),
                                         Polynomial::from_rationals(Q, pq));
    bool same = true;
    for (const auto& v : vals) same = same && v == vals[0];
    if (!same || !(lib == NormValue::p_power(7, -vals[0]))) ++padic_fail;
  }
  std::ostringstream os;
  os << arch_fail << "/50 archimedean mismatches (worst relative error " << worst << "), " << padic_fail
     << "/50 7-adic mismatches against the Newton polygon";
  return {8, "rigid-point seminorm", arch_fail == 0 && padic_fail == 0, os.str()};
}

Outcome c9_coefficient_bound(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 9);
  const BaseRing C = BaseRing::complexes();
  const Rational s(1, 2), t(2), u(3, 4), v(3, 2);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_real_distribution<double> x(-1.0, 1.0);
  std::size_t violations = 0, unsound = 0, ultra_violations = 0;
  for (int run = 0; run < 100; ++run) {
    std::vector<RingElement> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.push_back(Complex(x(rng), x(rng)));
    const Series f(C, 0, c, s, t);
    const SupBracket br = sup_bracket(f, 4096);
    const CoefficientBoundReport rep = coefficient_bound_check(f, u, v, br);
    double lhs = 0.0;
    for (int k = 0; k <= d; ++k) {
      lhs += std::abs(std::get<Complex>(c[static_cast<std::size_t>(k)])) * std::max(std::pow(0.75, k), std::pow(1.5, k));
    }
    if (!rep.holds || lhs > rep.rhs.upper()) ++violations;
    // The certified upper bound must dominate dense samples on both circles.
    double sampled = 0.0;
    for (double radius : {0.5, 2.0}) {
      for (int i = 0; i < 20000; ++i) {
        const std::complex<double> z = std::polar(radius, 2.0 * M_PI * i / 20000.0);
        std::complex<double> acc = 0;
        for (int k = d; k >= 0; --k) acc = acc * z + std::get<Complex>(c[static_cast<std::size_t>(k)]);
        sampled = std::max(sampled, std::abs(acc));
      }
    }
    if (sampled > br.upper.upper()) ++unsound;
  }
  const BaseRing Q7 = BaseRing::padic_field(7, 40);
  for (int run = 0; run < 100; ++run) {
    std::vector<RingElement> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.push_back(random_element(Q7, rng, 30));
    const Series f(Q7, 0, c, s, t);
    const CoefficientBoundReport rep = coefficient_bound_check(f, u, v, sup_bracket(f));
    if (!rep.holds) ++ultra_violations;
  }
  std::ostringstream os;
  os << violations << "/100 complex violations, " << unsound << " unsound sup brackets, " << ultra_violations
     << "/100 7-adic violations";
  return {9, "coefficient bound", violations == 0 && unsound == 0 && ultra_violations == 0, os.str()};
}

Outcome c10_pi_content(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 10);
  const BaseRing R = BaseRing::padic_dvr(7, 40);
  std::uniform_int_distribution<int> len(1, 15), shift(0, 4), coef(-60, 60);
  std::size_t failures = 0;
  for (int run = 0; run < 100; ++run) {
    const int L = len(rng);
    const int k = shift(rng);
    std::vector<RingElement> c;
    QPoly fq;
    bool nonzero = false;
    for (int i = 0; i < L; ++i) {
      mpq_class q = coef(rng);
      if (i == L - 1 && !nonzero && q == 0) q = 1;
      nonzero = nonzero || q != 0;
      q *= prime_power(7, k + shift(rng) % 2);
      fq.push_back(q);
      c.push_back(R.from_rational(q));
    }
    const Series f(R, 0, c, Rational(0), Rational(1));
    const PiContent pc = pi_content(f);
    std::int64_t vmin = std::numeric_limits<std::int64_t>::max();
    for (const auto& q : fq) vmin = std::min(vmin, oracle::valuation(q, 7));
    bool ok = pc.v == vmin;
    bool unit = false;
    for (long n = 0; n < L; ++n) {
      const mpq_class g = R.to_rational(pc.g.coeff(n));
      ok = ok && g * prime_power(7, pc.v) == fq[static_cast<std::size_t>(n)];
      unit = unit || (g != 0 && oracle::valuation(g, 7) == 0);
    }
    if (!ok || !unit) ++failures;
  }
  std::ostringstream os;
  os << failures << "/100 failures";
  return {10, "pi-content", failures == 0, os.str()};
}

Outcome c11_rg(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 11);
  const BaseRing Z = BaseRing::integers();
  std::uniform_int_distribution<int> deg(1, 5), small(-6, 6), kdeg(0, 3), coin(0, 3);
  std::size_t verdict_fail = 0, bound_fail = 0, zero_cases = 0;
  for (int run = 0; run < 100; ++run) {
    QPoly g;
    if (coin(rng) == 0) {
      const QPoly h{small(rng), 1};
      QPoly k{1};
      const int kd = kdeg(rng);
      for (int i = 0; i < kd; ++i) k = oracle::mul(k, QPoly{small(rng), 1});
      g = oracle::mul(oracle::mul(h, h), k);
    } else {
      const int d = deg(rng);
      for (int i = 0; i < d; ++i) g.push_back(small(rng));
      g.push_back(1);
    }
    std::vector<Rational> gq(g.begin(), g.end());
    const MonicPolynomial G(Polynomial::from_rationals(Z, gq));
    const mpq_class res = oracle::resultant(g, oracle::derivative(g));
    if (res == 0) ++zero_cases;
    for (const SpectrumPoint& b : {SpectrumPoint::arch(1), SpectrumPoint::padic(2, 1)}) {
      const ConditionReport rep = check_RG(G, {BoundaryPoint{b, std::nullopt}});
      const bool want = res != 0;
      const mpq_class expect = b.kind == SpectrumPoint::Kind::arch ? mpq_class(abs(res)) : oracle::padic_abs(res, 2);
      const bool verdict_ok = want ? rep.verdict == Verdict::satisfied : rep.verdict == Verdict::violated;
      const bool m_ok = rep.m_U && *rep.m_U == NormValue::of(expect);
      if (!verdict_ok || !m_ok) ++verdict_fail;
      const NormValue rb = root_bound(G, b);
      if (b.kind == SpectrumPoint::Kind::arch) {
        for (const auto& r : oracle::roots(oracle::to_complex(g))) {
          if (std::abs(r) > rb.upper() * (1 + 1e-9)) ++bound_fail;
        }
      } else {
        for (const auto& v : oracle::newton_polygon_root_valuations(g, 2)) {
          if (v == mpq_class(std::numeric_limits<long>::max())) continue;
          if (!(NormValue::p_power(2, -v) <= rb)) ++bound_fail;
        }
      }
    }
  }
  std::ostringstream os;
  os << verdict_fail << " verdict/m_U mismatches over 200 checks (" << zero_cases << " inseparable G), " << bound_fail
     << " roots above the bound";
  return {11, "resultant condition and root bound", verdict_fail == 0 && bound_fail == 0, os.str()};
}

Outcome c12_endo(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 12);
  std::uniform_int_distribution<int> small(-4, 4), den(1, 5);
  std::size_t failures = 0, runs = 0;
  std::string first;
  for (const BaseRing& R : {BaseRing::rationals(), BaseRing::padic_field(7, 40)}) {
    for (int run = 0; run < 50; ++run) {
      const Polynomial P = Polynomial::from_rationals(R, {small(rng), small(rng), small(rng), 1});
      mpq_class outer = 1;
      for (int k = 0; k < 3; ++k) outer += abs(R.to_rational(P.coeff(static_cast<std::size_t>(k))));
      if (R.is_padic()) outer = 1;
      const EndoContext ctx(P);
      const EndoElement h = random_endo_element(ctx, 12, outer, rng);
      RingElement sigma;
      if (R.is_padic()) {
        sigma = random_element(R, rng, 20);
      } else {
        const int d = den(rng);
        std::uniform_int_distribution<int> num(-d, d);
        mpq_class q(num(rng), d);
        q.canonicalize();
        sigma = R.from_rational(q);
      }
      ++runs;
      const PullbackValue pv = pullback_eval(h, FiberPoint::rational_point(sigma), ctx);
      const mpq_class s = R.to_rational(sigma);
      const mpq_class t = oracle::eval(to_q(P), s);
      mpq_class expect = 0, si = 1;
      for (const auto& c : h.coords) {
        expect += oracle::eval(to_q(c), t) * si;
        si *= s;
      }
      if (!pv.agree || R.to_rational(pv.via_T) != expect || R.to_rational(pv.via_S) != expect) {
        ++failures;
        if (first.empty()) {
          first = R.name() + ": agree " + std::to_string(pv.agree) + ", via_T " + R.to_string(pv.via_T) + ", via_S " +
                  R.to_string(pv.via_S) + ", oracle " + expect.get_str();
        }
      }
    }
  }
  std::ostringstream os;
  os << failures << "/" << runs << " disagreements";
  if (!first.empty()) os << "; first: " << first;
  return {12, "endomorphism compatibility", failures == 0, os.str()};
}

Outcome c13_nilpotent(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 13);
  const BaseRing Q = BaseRing::rationals();
  const MonicPolynomial G(Polynomial::from_rationals(Q, {0, 0, 1}));
  const ConditionReport rep = estimate_NG(G, Rational(2), 20, rng, 6);
  const bool witness = rep.witness && to_q(*rep.witness) == QPoly{0, 1};
  const bool small = rep.witness_estimate && rep.witness_estimate->upper() < 1e-6;
  std::ostringstream os;
  os << "verdict " << verdict_name(rep.verdict);
  if (rep.witness) os << ", witness " << rep.witness->str();
  if (rep.witness_estimate) os << ", estimate " << rep.witness_estimate->str();
  return {13, "nilpotent refutation", rep.verdict == Verdict::violated && witness && small, os.str()};
}

}  // namespace

std::vector<Outcome> run_all(const std::string& filter, std::uint64_t seed) {
  const std::vector<std::function<Outcome(std::uint64_t)>> all = {
      c1_global_exactness, c2_certificate, c3_idempotence, c4_hensel, c5_factor_dg, c6_local_division, c7_preparation,
      c8_rigid,            c9_coefficient_bound, c10_pi_content, c11_rg, c12_endo, c13_nilpotent};
  std::set<int> wanted;
  if (!filter.empty() && filter != "acceptance" && filter != "all") {
    std::stringstream ss(filter);
    std::string item;
    while (std::getline(ss, item, ',')) wanted.insert(std::stoi(item));
  }
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i](seed);
    } catch (const wst::Error& e) {
      o = {id, "criterion " + std::to_string(id), false, std::string("error ") + wst::errc_name(e.code()) + ": " + e.what()};
    } catch (const std::exception& e) {
      o = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(o);
  }
  return out;
}

}  // namespace acceptance
