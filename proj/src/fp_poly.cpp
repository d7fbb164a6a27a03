#include "wst/fp_poly.hpp"

#include <algorithm>
#include <map>

#include "wst/error.hpp"

namespace wst::fp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t addmod(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  const u128 s = static_cast<u128>(a) + b;
  return static_cast<std::uint64_t>(s % p);
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// Square-free decomposition: pairs (square-free part, multiplicity).
void squarefree(std::uint64_t p, const Poly& f, int scale_mult, std::vector<std::pair<Poly, int>>& out) {
  if (degree(f) <= 0) return;
  const Poly df = derivative(p, f);
  if (df.empty()) {
    Poly root;
    for (std::size_t k = 0; k < f.size(); k += p) root.push_back(f[k]);
    squarefree(p, trim(root), scale_mult * static_cast<int>(p), out);
    return;
  }
  Poly c = gcd(p, f, df);
  Poly w = divrem(p, f, c).first;
  int i = 1;
  while (!is_one(w)) {
    Poly y = gcd(p, w, c);
    Poly fac = divrem(p, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(p, fac), i * scale_mult);
    w = y;
    c = divrem(p, c, y).first;
    ++i;
  }
  if (!is_one(c)) {
    Poly root;
    for (std::size_t k = 0; k < c.size(); k += p) root.push_back(c[k]);
    squarefree(p, trim(root), scale_mult * static_cast<int>(p), out);
  }
}

std::vector<std::pair<Poly, int>> distinct_degree(std::uint64_t p, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = mod(p, x, f);
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(p, h, Integer(p), f);
    Poly g = gcd(p, sub(p, h, x), f);
    if (!is_one(g)) {
      out.emplace_back(g, i);
      f = divrem(p, f, g).first;
      h = mod(p, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

void equal_degree(std::uint64_t p, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(g);
  if (n == d) {
    out.push_back(monic(p, g));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  const Integer pd = ipow(Integer(p), static_cast<unsigned long>(d));
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    a = trim(a);
    if (degree(a) <= 0) continue;
    Poly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly term = mod(p, a, g);
      b = term;
      for (int k = 1; k < d; ++k) {
        term = mod(p, mul(p, term, term), g);
        b = add(p, b, term);
      }
    } else {
      b = sub(p, powmod(p, a, (pd - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(p, b, g);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree(p, h, d, rng, out);
      equal_degree(p, divrem(p, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly from_integers(std::uint64_t p, const std::vector<Integer>& c) {
  Poly out;
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& x : c) out.push_back(wst::mod(x, P).get_ui());
  return trim(out);
}

Poly add(std::uint64_t p, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = addmod(p, i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return trim(c);
}

Poly sub(std::uint64_t p, const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = b[i] == 0 ? 0 : p - b[i];
  return add(p, a, nb);
}

Poly mul(std::uint64_t p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(p, c[i + j], mulmod(p, a[i], b[j]));
  }
  return trim(c);
}

Poly scale(std::uint64_t p, const Poly& a, std::uint64_t s) {
  Poly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mulmod(p, a[i], s);
  return trim(c);
}

std::uint64_t inv(std::uint64_t p, std::uint64_t a) {
  return mod_inverse(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(p))).get_ui();
}

std::pair<Poly, Poly> divrem(std::uint64_t p, const Poly& a, const Poly& b) {
  require(!b.empty(), Errc::not_invertible, "division by zero polynomial over F_p");
  if (degree(a) < degree(b)) return {{}, a};
  Poly r = a;
  Poly q(static_cast<std::size_t>(degree(a) - degree(b) + 1), 0);
  const std::uint64_t li = inv(p, b.back());
  for (int k = degree(a); k >= degree(b); --k) {
    const std::uint64_t c = mulmod(p, r[static_cast<std::size_t>(k)], li);
    q[static_cast<std::size_t>(k - degree(b))] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto& slot = r[static_cast<std::size_t>(k - degree(b)) + i];
      slot = addmod(p, slot, p - mulmod(p, c, b[i]));
    }
  }
  r.resize(static_cast<std::size_t>(degree(b)));
  return {trim(q), trim(r)};
}

Poly mod(std::uint64_t p, const Poly& a, const Poly& m) { return divrem(p, a, m).second; }

Poly monic(std::uint64_t p, const Poly& a) {
  if (a.empty()) return a;
  return scale(p, a, inv(p, a.back()));
}

Poly gcd(std::uint64_t p, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(p, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(p, a);
}

Bezout extgcd(std::uint64_t p, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(p, r0, r1);
    Poly s2 = sub(p, s0, mul(p, q, s1));
    Poly t2 = sub(p, t0, mul(p, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint64_t li = inv(p, r0.back());
  return {scale(p, r0, li), scale(p, s0, li), scale(p, t0, li)};
}

Poly derivative(std::uint64_t p, const Poly& a) {
  Poly d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(mulmod(p, a[k], k % p));
  return trim(d);
}

Poly powmod(std::uint64_t p, Poly base, const Integer& e, const Poly& m) {
  Poly result = mod(p, Poly{1}, m);
  base = mod(p, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(p, mul(p, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(p, mul(p, result, base), m);
  }
  return result;
}

std::vector<std::pair<Poly, int>> factor(std::uint64_t p, const Poly& f, std::mt19937_64& rng) {
  require(!f.empty(), Errc::invalid_argument, "factor of the zero polynomial");
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(p, monic(p, f), 1, sqf);
  std::map<Poly, int> acc;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(p, part)) {
      std::vector<Poly> irr;
      equal_degree(p, block, d, rng, irr);
      for (auto& g : irr) acc[g] += mult;
    }
  }
  std::vector<std::pair<Poly, int>> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
  });
  return out;
}

}  // namespace wst::fp
