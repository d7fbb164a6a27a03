#include "wst/division_local.hpp"

#include <bit>

#include "wst/error.hpp"

namespace wst {

namespace {

bool element_exact(const RingElement& c) {
  if (const auto* a = std::get_if<PAdic>(&c)) return a->is_exact();
  return !std::holds_alternative<Complex>(c);
}

bool poly_exact(const Polynomial& p) {
  for (const auto& c : p.coeffs()) {
    if (!element_exact(c)) return false;
  }
  return true;
}

bool local_exact(const LocalElement& f) {
  for (int i = 0; i < f.degree(); ++i) {
    for (long j = 0; j <= f.window(); ++j) {
      if (!element_exact(f.at(i, j))) return false;
    }
  }
  return true;
}

NormValue max_coeff_norm(const Polynomial& p) {
  NormValue m = NormValue::zero();
  for (const auto& c : p.coeffs()) {
    if (!p.ring().is_zero(c)) m = max(m, p.ring().norm_bound(c));
  }
  return m;
}

std::int64_t min_abs_precision(const Polynomial& p) {
  std::int64_t m = PAdic::kInfinite;
  for (const auto& c : p.coeffs()) {
    if (const auto* a = std::get_if<PAdic>(&c)) m = std::min(m, a->absolute_precision());
  }
  return m;
}

// Inverse of the T^0 part of u modulo P_eps, as a local element.
LocalElement seed_inverse(const LocalElement& u, const LocalContext& ctx) {
  const BaseRing& R = ctx.ring;
  std::vector<RingElement> h0;
  for (int i = 0; i < u.degree(); ++i) h0.push_back(u.at(i, 0));
  const Polynomial h(R, h0);
  require(!h.is_zero(), Errc::not_a_unit, "fiber image is zero");
  const ExtGcd eg = extgcd(h, ctx.P_eps.poly());
  require(eg.g.degree() == 0, Errc::not_a_unit, "fiber image is not invertible modulo P");
  const Polynomial inv = divrem_monic(eg.s.scaled(R.inv(eg.g.coeff(0))), ctx.P_eps.poly()).remainder;
  return LocalElement::from_polynomial(ctx, inv);
}

NormValue resolve_tol(const LocalContext& ctx, const LocalElement& F, bool exact) {
  const BaseRing& R = ctx.ring;
  if (R.kind() == RingKind::complex_arch) {
    const NormValue rel = ctx.tol.value_or(NormValue::of(Rational(1, 10000000000)));
    const double t = round_up(rel.upper() * local_norm(F, ctx).upper());
    return NormValue::interval(t, t);
  }
  if (!ctx.tol.has_value() || ctx.tol->is_zero()) {
    if (R.is_exact() || exact) return NormValue::zero();
  }
  if (ctx.tol) return *ctx.tol;
  return NormValue::p_power(R.prime(), Rational(-(R.precision() - 5)));
}

}  // namespace

LocalContext make_local_context(const SpectrumPoint& b, const FiberPoint& x, const BaseRing& ring_in,
                                const LocalOptions& opt) {
  require(x.kind == FiberPoint::Kind::rigid, Errc::unsupported_point, "local division needs a rigid point");
  require(b.eps == 1 || b.kind == SpectrumPoint::Kind::trivial, Errc::unsupported_point,
          "local division supports base points with exponent 1");
  require(b.kind != SpectrumPoint::Kind::padic_residue, Errc::unsupported_point,
          "local division over residue points is not supported");
  require(opt.s > 0 && opt.s < opt.r, Errc::invalid_argument, "need 0 < s < r");
  require(opt.window >= 1, Errc::invalid_argument, "window must be >= 1");
  LocalContext ctx;
  ctx.b = b;
  ctx.ring = ring_in.fraction_field();
  if (b.kind == SpectrumPoint::Kind::trivial) {
    require(ctx.ring.is_exact(), Errc::unsupported_point, "trivial points need rational data");
    ctx.ring = BaseRing::trivial_rationals();
  }
  require(compatible(b, ctx.ring), Errc::incompatible_norm_kind,
          "point " + b.str() + " does not act on " + ctx.ring.name());
  ctx.P = x.min_poly.change_ring(ctx.ring);
  require(ctx.P.degree() >= 1 && ctx.P.is_monic(), Errc::invalid_argument, "minimal polynomial must be monic");
  ctx.cls = classify_rigid(b, x, ring_in);
  ctx.r = opt.r;
  ctx.s = opt.s;
  ctx.window = opt.window;
  ctx.D = opt.D.value_or(NormValue::one());
  ctx.max_iter = opt.max_iter;
  ctx.tol = opt.tol;
  ctx.tau_zero = opt.tau_zero;
  if (opt.exact_data) {
    ctx.tol = NormValue::zero();
    ctx.tau_zero = NormValue::zero();
  }

  if (!ctx.ring.is_padic() || poly_exact(ctx.P)) {
    ctx.P_eps = MonicPolynomial(ctx.P);
    ctx.eps = NormValue::zero();
    return ctx;
  }
  std::vector<RingElement> c;
  if (ctx.cls == RigidClass::thick) {
    for (const auto& a : ctx.P.coeffs()) c.push_back(ctx.ring.from_rational(*reconstruct_padic(std::get<PAdic>(a))));
  } else {
    const std::int64_t prec = min_abs_precision(ctx.P);
    const std::int64_t digits = (2 * prec + 2) / 3;
    for (const auto& a : ctx.P.coeffs()) {
      c.push_back(ctx.ring.from_rational(std::get<PAdic>(a).truncated_abs(digits).representative()));
    }
  }
  const Polynomial pe(ctx.ring, std::move(c));
  ctx.P_eps = MonicPolynomial(pe);
  ctx.eps = max_coeff_norm(pe - ctx.P);
  if (ctx.cls != RigidClass::thick) {
    require(!ctx.ring.is_zero(resultant(pe, pe.derivative())), Errc::invalid_argument,
            "truncated minimal polynomial is not separable");
  }
  return ctx;
}

LocalElement::LocalElement(const LocalContext& ctx, std::vector<std::vector<RingElement>> coords)
    : ring_(ctx.ring), modulus_(ctx.P_eps.poly()), window_(ctx.window), c_(std::move(coords)) {
  require(static_cast<int>(c_.size()) == ctx.degree(), Errc::malformed_element, "wrong number of S-coordinates");
  for (auto& row : c_) {
    require(static_cast<long>(row.size()) <= window_ + 1, Errc::malformed_element, "coordinate exceeds the window");
    row.resize(static_cast<std::size_t>(window_ + 1), ring_.zero());
  }
}

LocalElement LocalElement::zero(const LocalContext& ctx) {
  return LocalElement(ctx, std::vector<std::vector<RingElement>>(static_cast<std::size_t>(ctx.degree())));
}

LocalElement LocalElement::one(const LocalContext& ctx) {
  LocalElement e = zero(ctx);
  e.c_[0][0] = ctx.ring.one();
  return e;
}

LocalElement LocalElement::from_polynomial(const LocalContext& ctx, const Polynomial& f_in) {
  const Polynomial f = f_in.ring() == ctx.ring ? f_in : f_in.change_ring(ctx.ring);
  LocalElement e = zero(ctx);
  Polynomial rest = f;
  for (long j = 0; !rest.is_zero(); ++j) {
    require(j <= ctx.window, Errc::invalid_argument,
            "degree " + std::to_string(f.degree()) + " does not fit in window " + std::to_string(ctx.window));
    DivRem qr = divrem_monic(rest, ctx.P_eps.poly());
    for (int i = 0; i <= qr.remainder.degree(); ++i) {
      e.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = qr.remainder.coeff(static_cast<std::size_t>(i));
    }
    rest = qr.quotient;
  }
  return e;
}

Series LocalElement::coord(int i, const Rational& outer) const {
  return Series(ring_, 0, c_[static_cast<std::size_t>(i)], Rational(0), outer, NormValue::zero());
}

bool LocalElement::is_zero() const {
  for (const auto& row : c_) {
    for (const auto& x : row) {
      if (!ring_.is_zero(x)) return false;
    }
  }
  return true;
}

Polynomial LocalElement::to_polynomial() const {
  Polynomial acc(ring_);
  for (long j = window_; j >= 0; --j) {
    std::vector<RingElement> layer;
    for (const auto& row : c_) layer.push_back(row[static_cast<std::size_t>(j)]);
    acc = acc * modulus_ + Polynomial(ring_, std::move(layer));
  }
  return acc;
}

LocalElement operator+(const LocalElement& a, const LocalElement& b) {
  LocalElement out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    for (std::size_t j = 0; j < out.c_[i].size(); ++j) out.c_[i][j] = a.ring_.add(a.c_[i][j], b.c_[i][j]);
  }
  return out;
}

LocalElement operator-(const LocalElement& a, const LocalElement& b) {
  LocalElement out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    for (std::size_t j = 0; j < out.c_[i].size(); ++j) out.c_[i][j] = a.ring_.sub(a.c_[i][j], b.c_[i][j]);
  }
  return out;
}

LocalElement operator*(const LocalElement& a, const LocalElement& b) {
  const BaseRing& R = a.ring_;
  const std::size_t d = a.c_.size();
  const std::size_t W = static_cast<std::size_t>(a.window_) + 1;
  std::vector<std::vector<RingElement>> prod(2 * d - 1, std::vector<RingElement>(W, R.zero()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < W; ++j) {
      if (R.is_zero(a.c_[i][j])) continue;
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l + j < W; ++l) {
          if (R.is_zero(b.c_[k][l])) continue;
          prod[i + k][j + l] = R.add(prod[i + k][j + l], R.mul(a.c_[i][j], b.c_[k][l]));
        }
      }
    }
  }
  // S^m = S^(m-d) (T - sum_{i<d} p_i S^i).
  for (std::size_t m = 2 * d - 2; m >= d; --m) {
    for (std::size_t j = 0; j < W; ++j) {
      const RingElement c = prod[m][j];
      if (R.is_zero(c)) continue;
      if (j + 1 < W) prod[m - d][j + 1] = R.add(prod[m - d][j + 1], c);
      for (std::size_t i = 0; i < d; ++i) {
        const RingElement pi = a.modulus_.coeff(i);
        if (!R.is_zero(pi)) prod[m - d + i][j] = R.sub(prod[m - d + i][j], R.mul(c, pi));
      }
    }
  }
  prod.resize(d);
  LocalElement out = a;
  out.c_ = std::move(prod);
  return out;
}

LocalElement LocalElement::scaled(const RingElement& c) const {
  LocalElement out = *this;
  for (auto& row : out.c_) {
    for (auto& x : row) x = ring_.mul(x, c);
  }
  return out;
}

LocalElement LocalElement::high_part(long n) const {
  LocalElement out = *this;
  for (auto& row : out.c_) {
    std::vector<RingElement> shifted(row.size(), ring_.zero());
    for (std::size_t j = static_cast<std::size_t>(n); j < row.size(); ++j) shifted[j - static_cast<std::size_t>(n)] = row[j];
    row = std::move(shifted);
  }
  return out;
}

LocalElement LocalElement::low_part(long n) const {
  LocalElement out = *this;
  for (auto& row : out.c_) {
    for (std::size_t j = static_cast<std::size_t>(n); j < row.size(); ++j) row[j] = ring_.zero();
  }
  return out;
}

LocalElement LocalElement::shifted_up(long n) const {
  LocalElement out = *this;
  for (auto& row : out.c_) {
    std::vector<RingElement> shifted(row.size(), ring_.zero());
    for (std::size_t j = 0; j + static_cast<std::size_t>(n) < row.size(); ++j) shifted[j + static_cast<std::size_t>(n)] = row[j];
    row = std::move(shifted);
  }
  return out;
}

NormValue local_norm(const LocalElement& f, const LocalContext& ctx) {
  const BaseRing& R = f.ring();
  const bool ultra = R.is_ultrametric();
  NormValue out = NormValue::zero();
  for (int i = 0; i < f.degree(); ++i) {
    NormValue acc = NormValue::zero();
    Rational sj = 1;
    for (long j = 0; j <= f.window(); ++j, sj *= ctx.s) {
      const RingElement& c = f.at(i, j);
      if (R.is_zero(c)) continue;
      const NormValue term = R.norm_bound(c) * NormValue::of(sj);
      acc = ultra ? max(acc, term) : acc + term;
    }
    out = max(out, acc);
  }
  return out;
}

NormValue local_product_constant(const LocalContext& ctx) {
  const int d = ctx.degree();
  const bool ultra = ctx.ring.is_ultrametric();
  NormValue out = NormValue::zero();
  for (int m = 0; m <= 2 * d - 2; ++m) {
    const NormValue nm = local_norm(
        LocalElement::from_polynomial(ctx, Polynomial::monomial(ctx.ring, ctx.ring.one(), static_cast<std::size_t>(m))),
        ctx);
    const long pairs = std::min(m, 2 * d - 2 - m) + 1;
    out = ultra ? max(out, nm) : out + NormValue::of(pairs) * nm;
  }
  return out;
}

long fiber_valuation(const LocalElement& G, const LocalContext& ctx) {
  const BaseRing& R = ctx.ring;
  Polynomial g = G.to_polynomial();
  NormValue tau;
  if (ctx.tau_zero) {
    tau = *ctx.tau_zero;
    if (R.kind() == RingKind::complex_arch) tau = tau * max_coeff_norm(g);
  } else if (R.kind() == RingKind::complex_arch) {
    tau = NormValue::interval(0.0, round_up(1e-9 * max_coeff_norm(g).upper()));
  } else if (R.is_padic() && !(poly_exact(g) && poly_exact(ctx.P))) {
    tau = NormValue::p_power(R.prime(), Rational(-(R.precision() - 3)));
  } else {
    tau = NormValue::zero();
  }
  auto negligible = [&](const Polynomial& p) {
    for (const auto& c : p.coeffs()) {
      if (R.is_zero(c)) continue;
      if (!(R.norm_bound(c) <= tau)) return false;
    }
    return true;
  };
  require(!negligible(g), Errc::fiber_zero, "fiber image of G is indistinguishable from 0");
  long n = 0;
  while (g.degree() >= ctx.P.degree()) {
    DivRem qr = divrem_monic(g, ctx.P);
    if (!negligible(qr.remainder)) break;
    g = qr.quotient;
    ++n;
  }
  return n;
}

UnitInverse unit_inverse_K(const LocalElement& G, long n, const LocalContext& ctx) {
  require(n >= 0 && n < ctx.window, Errc::invalid_argument, "valuation does not fit in the window");
  const LocalElement H = G.high_part(n);
  const LocalElement Tn = LocalElement::one(ctx).shifted_up(n);
  const LocalElement two = LocalElement::one(ctx).scaled(ctx.ring.from_integer(2));
  UnitInverse out;
  const NormValue one_minus = NormValue::of(1 - ctx.s / ctx.r);
  out.budget = NormValue::of(Rational(1, 2)) / local_product_constant(ctx) / ctx.D * one_minus *
               NormValue::of(rpow(ctx.s, n));
  LocalElement K = seed_inverse(H, ctx);
  for (int it = 0; it <= 64; ++it) {
    const LocalElement defect = K * G - Tn;
    out.defect = defect.is_zero() ? NormValue::zero() : local_norm(defect, ctx);
    if (out.defect <= out.budget) {
      out.K = K;
      out.iterations = it;
      return out;
    }
    K = K * (two - H * K);
  }
  fail(Errc::not_contracting, "reciprocal iteration did not reach the budget " + out.budget.str());
}

LocalElement local_inverse(const LocalElement& u, const LocalContext& ctx) {
  const LocalElement two = LocalElement::one(ctx).scaled(ctx.ring.from_integer(2));
  LocalElement K = seed_inverse(u, ctx);
  const int rounds = std::bit_width(static_cast<unsigned long>(ctx.window + 1)) + 2;
  for (int it = 0; it < rounds; ++it) K = K * (two - u * K);
  return K;
}

LocalDivisionResult divide_local(const LocalElement& F, const LocalElement& G, const LocalContext& ctx) {
  LocalDivisionResult out;
  out.n = fiber_valuation(G, ctx);
  const long n = out.n;
  out.C_hat = local_product_constant(ctx);
  const UnitInverse ui = unit_inverse_K(G, n, ctx);
  out.K = ui.K;
  const LocalElement KG = ui.K * G;
  out.theta = out.C_hat * NormValue::of(rpow(ctx.s, -n)) * ui.defect;
  require(out.theta < NormValue::one(), Errc::not_contracting, "theta = " + out.theta.str() + " is not below 1");
  const bool exact = ctx.ring.is_padic() && local_exact(F) && local_exact(G) && poly_exact(ctx.P_eps.poly());
  const NormValue tol = resolve_tol(ctx, F, exact);

  LocalElement phi = F;
  for (int it = 0;; ++it) {
    const LocalElement res = F - (phi.high_part(n) * KG + phi.low_part(n));
    const bool zero = res.is_zero();
    out.residual = zero ? NormValue::zero() : local_norm(res, ctx);
    out.residual_log.push_back(out.residual);
    if (zero || out.residual <= tol) {
      out.iterations = it;
      break;
    }
    require(it < ctx.max_iter, Errc::max_iterations,
            "residual " + out.residual.str() + " above tolerance after " + std::to_string(it) + " iterations");
    phi = phi + res;
  }
  out.Q = (phi.high_part(n) * ui.K).low_part(ctx.window + 1 - n);
  out.R = phi.low_part(n).to_polynomial();
  return out;
}

namespace {

LocalElement rewindow(const LocalElement& f, const LocalContext& ctx) {
  std::vector<std::vector<RingElement>> c(static_cast<std::size_t>(f.degree()));
  for (int i = 0; i < f.degree(); ++i) {
    for (long j = 0; j <= ctx.window; ++j) c[static_cast<std::size_t>(i)].push_back(j <= f.window() ? f.at(i, j) : ctx.ring.zero());
  }
  return LocalElement(ctx, std::move(c));
}

}  // namespace

Preparation prepare(const LocalElement& G, const LocalContext& ctx) {
  require(ctx.cls == RigidClass::thick, Errc::unsupported_point, "preparation needs a thick rigid point");
  Preparation out;
  out.n = fiber_valuation(G, ctx);
  // Dividing by a T-order n element loses n T-degrees of Q, so work n degrees deeper.
  LocalContext wide = ctx;
  wide.window = ctx.window + out.n;
  const Polynomial Pn = ctx.P_eps.poly().pow(static_cast<unsigned long>(out.n));
  const LocalDivisionResult div = divide_local(LocalElement::from_polynomial(wide, Pn), rewindow(G, wide), wide);
  out.division = div;
  out.division.Q = rewindow(div.Q, ctx);
  out.division.K = rewindow(div.K, ctx);
  out.E_inv = out.division.Q;
  out.E = local_inverse(out.E_inv, ctx);
  out.Omega = MonicPolynomial(Pn - out.division.R);
  out.omega_deviation = max_coeff_norm(out.division.R);
  const LocalElement diff = G * out.E_inv - LocalElement::from_polynomial(ctx, out.Omega.poly());
  out.residual = diff.is_zero() ? NormValue::zero() : local_norm(diff, ctx);
  return out;
}

}  // namespace wst
