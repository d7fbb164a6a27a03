#include "wst/polynomial.hpp"

#include <algorithm>

#include "wst/error.hpp"

namespace wst {

Polynomial::Polynomial(BaseRing ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) ring_.check(c);
  trim();
}

Polynomial Polynomial::from_rationals(const BaseRing& ring, const std::vector<Rational>& coeffs) {
  std::vector<RingElement> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(ring.from_rational(q));
  return Polynomial(ring, std::move(c));
}

Polynomial Polynomial::constant(const BaseRing& ring, const RingElement& c) { return Polynomial(ring, {c}); }

Polynomial Polynomial::monomial(const BaseRing& ring, const RingElement& c, std::size_t k) {
  std::vector<RingElement> v(k + 1, ring.zero());
  v[k] = c;
  return Polynomial(ring, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

RingElement Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_.zero(); }

RingElement Polynomial::leading() const { return is_zero() ? ring_.zero() : coeffs_.back(); }

bool Polynomial::is_monic() const { return !is_zero() && ring_.is_one(coeffs_.back()); }

bool Polynomial::equal(const Polynomial& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ring_.equal(coeffs_[i], o.coeffs_[i])) return false;
  }
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<RingElement> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.coeffs_.size()) c.push_back(b.coeffs_[i]);
    else if (i >= b.coeffs_.size()) c.push_back(a.coeffs_[i]);
    else c.push_back(a.ring_.add(a.coeffs_[i], b.coeffs_[i]));
  }
  return Polynomial(a.ring_, std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<RingElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(ring_.neg(x));
  return Polynomial(ring_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const BaseRing& R = a.ring_;
  std::vector<RingElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, R.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (R.is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = R.add(c[i + j], R.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(R, std::move(c));
}

Polynomial Polynomial::scaled(const RingElement& s) const {
  std::vector<RingElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(ring_.mul(x, s));
  return Polynomial(ring_, std::move(c));
}

RingElement Polynomial::eval(const RingElement& x) const {
  RingElement acc = ring_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<RingElement> c;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c.push_back(ring_.mul(coeffs_[k], ring_.from_integer(static_cast<long>(k))));
  }
  return Polynomial(ring_, std::move(c));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc(ring_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(ring_, *it);
  return acc;
}

Polynomial Polynomial::taylor_shift(const RingElement& c) const {
  Polynomial lin(ring_, {c, ring_.one()});
  return compose(lin);
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = constant(ring_, ring_.one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::truncated(std::size_t n) const {
  std::vector<RingElement> c(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
  return Polynomial(ring_, std::move(c));
}

Polynomial Polynomial::change_ring(const BaseRing& target) const {
  std::vector<RingElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) {
    if (target.kind() == RingKind::complex_arch) c.push_back(ring_.to_complex(x));
    else if (target.is_padic() && ring_.is_padic() && target.prime() == ring_.prime()) c.push_back(x);
    else c.push_back(target.from_rational(ring_.to_rational(x)));
  }
  return Polynomial(target, std::move(c));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (ring_.is_zero(coeffs_[k])) continue;
    if (!out.empty()) out += " + ";
    out += ring_.to_string(coeffs_[k]);
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

DivRem divrem_monic(const Polynomial& f, const Polynomial& g) {
  require(g.is_monic(), Errc::invalid_argument, "divisor is not monic");
  const BaseRing& R = f.ring();
  const int d = g.degree();
  if (f.degree() < d) return {Polynomial(R), f};
  std::vector<RingElement> r = f.coeffs();
  std::vector<RingElement> q(static_cast<std::size_t>(f.degree() - d + 1), R.zero());
  for (int k = f.degree(); k >= d; --k) {
    const RingElement c = r[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - d)] = c;
    if (R.is_zero(c)) continue;
    for (int i = 0; i <= d; ++i) {
      auto& slot = r[static_cast<std::size_t>(k - d + i)];
      slot = R.sub(slot, R.mul(c, g.coeffs()[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(d));
  return {Polynomial(R, std::move(q)), Polynomial(R, std::move(r))};
}

DivRem divrem(const Polynomial& f, const Polynomial& g) {
  require(!g.is_zero(), Errc::not_invertible, "division by the zero polynomial");
  const BaseRing& R = f.ring();
  const RingElement lc_inv = R.inv(g.leading());
  std::vector<RingElement> gc = g.scaled(lc_inv).coeffs();
  gc.back() = R.one();
  DivRem qr = divrem_monic(f, Polynomial(R, std::move(gc)));
  qr.quotient = qr.quotient.scaled(lc_inv);
  return qr;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return extgcd(a, b).g; }

ExtGcd extgcd(const Polynomial& a, const Polynomial& b) {
  const BaseRing& R = a.ring();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(R, R.one()), s1(R);
  Polynomial t0(R), t1 = Polynomial::constant(R, R.one());
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Polynomial r2 = qr.remainder;
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const RingElement lc_inv = R.inv(r0.leading());
  return {r0.scaled(lc_inv), s0.scaled(lc_inv), t0.scaled(lc_inv)};
}

namespace {

using Matrix = std::vector<std::vector<RingElement>>;

// Row index of the pivot for column `col`, or -1 if no certified nonzero
// entry exists. Largest modulus (complex) or smallest valuation (p-adic).
int choose_pivot(const BaseRing& F, const Matrix& m, std::size_t col) {
  int best = -1;
  for (std::size_t r = col; r < m.size(); ++r) {
    const RingElement& x = m[r][col];
    if (F.is_padic()) {
      const PAdic& y = std::get<PAdic>(x);
      if (y.is_zero_like()) continue;
      if (best < 0 || y.valuation() < std::get<PAdic>(m[static_cast<std::size_t>(best)][col]).valuation()) {
        best = static_cast<int>(r);
      }
    } else if (F.kind() == RingKind::complex_arch) {
      const double a = std::abs(std::get<Complex>(x));
      if (a == 0.0) continue;
      if (best < 0 || a > std::abs(std::get<Complex>(m[static_cast<std::size_t>(best)][col]))) {
        best = static_cast<int>(r);
      }
    } else if (!F.is_zero(x)) {
      return static_cast<int>(r);
    }
  }
  return best;
}

}  // namespace

RingElement resultant(const Polynomial& a, const Polynomial& b) {
  const BaseRing& R = a.ring();
  if (a.is_zero() || b.is_zero()) return R.zero();
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return R.one();
  const BaseRing F = R.fraction_field();
  auto lift = [&](const RingElement& x) -> RingElement {
    if (R.kind() == RingKind::integer_arch) return Rational(std::get<Integer>(x));
    return x;
  };
  const auto N = static_cast<std::size_t>(m + n);
  Matrix M(N, std::vector<RingElement>(N, F.zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = lift(a.coeff(static_cast<std::size_t>(m - j)));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = lift(b.coeff(static_cast<std::size_t>(n - j)));
  }
  RingElement det = F.one();
  for (std::size_t col = 0; col < N; ++col) {
    const int piv = choose_pivot(F, M, col);
    if (piv < 0) {
      bool exact_zero = true;
      for (std::size_t r = col; r < N; ++r) exact_zero = exact_zero && F.is_zero(M[r][col]);
      require(exact_zero, Errc::precision_exhausted, "resultant: no certified pivot");
      return R.zero();
    }
    if (static_cast<std::size_t>(piv) != col) {
      std::swap(M[col], M[static_cast<std::size_t>(piv)]);
      det = F.neg(det);
    }
    det = F.mul(det, M[col][col]);
    const RingElement inv = F.inv(M[col][col]);
    for (std::size_t r = col + 1; r < N; ++r) {
      if (F.is_zero(M[r][col])) continue;
      const RingElement factor = F.mul(M[r][col], inv);
      for (std::size_t k = col + 1; k < N; ++k) M[r][k] = F.sub(M[r][k], F.mul(factor, M[col][k]));
    }
  }
  if (R.kind() == RingKind::integer_arch) return R.from_rational(std::get<Rational>(det));
  return det;
}

MonicPolynomial::MonicPolynomial(Polynomial p) : poly_(std::move(p)) {
  require(poly_.is_monic(), Errc::invalid_argument, "polynomial " + poly_.str() + " is not monic");
}

MonicPolynomial MonicPolynomial::from_lower(const BaseRing& ring, std::vector<RingElement> lower) {
  lower.push_back(ring.one());
  return MonicPolynomial(Polynomial(ring, std::move(lower)));
}

}  // namespace wst
