// Polynomial arithmetic over Z/p for two coefficient backends: machine words
// (p < 2^62, Montgomery-free __int128 reduction) and arbitrary-precision p.
// Shared generic code covers gcd, modular exponentiation and seeded
// Cantor-Zassenhaus factorization of squarefree inputs.
#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/numbers.hpp"
#include "slicekit/util.hpp"

namespace slicekit {

struct SmallMod {
  using V = int64_t;
  int64_t p;
  explicit SmallMod(int64_t prime) : p(prime) { SK_CHECK(p >= 2, "modulus too small"); }
  V zero() const { return 0; }
  V one() const { return 1 % p; }
  V from_int(const Int& x) const {
    Int r = x % p;
    if (r < 0) r += p;
    return (V)r;
  }
  bool is_zero(V a) const { return a == 0; }
  V add(V a, V b) const { V r = a + b; if (r >= p) r -= p; return r; }
  V sub(V a, V b) const { V r = a - b; if (r < 0) r += p; return r; }
  V neg(V a) const { return a ? p - a : 0; }
  V mul(V a, V b) const { return (V)((__int128)a * b % p); }
  V inv(V a) const {
    SK_CHECK(a != 0, "inverse of zero");
    // extended Euclid
    int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
    while (r1 != 0) {
      int64_t q = r0 / r1;
      int64_t tmp = t0 - q * t1; t0 = t1; t1 = tmp;
      tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    }
    SK_CHECK(r0 == 1, "inverse: not coprime");
    return t0 < 0 ? t0 + p : t0;
  }
  Int modulus() const { return Int(p); }
};

struct BigMod {
  using V = Int;
  Int p;
  explicit BigMod(Int prime) : p(std::move(prime)) { SK_CHECK(p >= 2, "modulus too small"); }
  V zero() const { return Int(0); }
  V one() const { return Int(1); }
  V from_int(const Int& x) const {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
  }
  bool is_zero(const V& a) const { return a == 0; }
  V add(const V& a, const V& b) const { Int r = a + b; if (r >= p) r -= p; return r; }
  V sub(const V& a, const V& b) const { Int r = a - b; if (r < 0) r += p; return r; }
  V neg(const V& a) const { return a == 0 ? a : Int(p - a); }
  V mul(const V& a, const V& b) const { return a * b % p; }
  V inv(const V& a) const {
    SK_CHECK(a != 0, "inverse of zero");
    Int t0 = 0, t1 = 1, r0 = p, r1 = a;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int tmp = t0 - q * t1; t0 = t1; t1 = tmp;
      tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    }
    SK_CHECK(r0 == 1, "inverse: not coprime");
    return t0 < 0 ? Int(t0 + p) : t0;
  }
  Int modulus() const { return p; }
};

// coefficients low-to-high, trailing zeros trimmed
template <class M>
struct MPoly {
  std::vector<typename M::V> c;
  void trim(const M& m) {
    while (!c.empty() && m.is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
};

template <class M>
MPoly<M> mp_from(const M& m, const std::vector<Int>& coeffs) {
  MPoly<M> r;
  r.c.reserve(coeffs.size());
  for (const Int& x : coeffs) r.c.push_back(m.from_int(x));
  r.trim(m);
  return r;
}

template <class M>
MPoly<M> mp_constant(const M& m, typename M::V v) {
  MPoly<M> r;
  if (!m.is_zero(v)) r.c.push_back(v);
  return r;
}

template <class M>
MPoly<M> mp_x(const M& m) {
  MPoly<M> r;
  r.c = {m.zero(), m.one()};
  return r;
}

template <class M>
bool mp_eq(const MPoly<M>& a, const MPoly<M>& b) { return a.c == b.c; }

template <class M>
MPoly<M> mp_add(const M& m, const MPoly<M>& a, const MPoly<M>& b) {
  MPoly<M> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), m.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    typename M::V v = m.zero();
    if (i < a.c.size()) v = m.add(v, a.c[i]);
    if (i < b.c.size()) v = m.add(v, b.c[i]);
    r.c[i] = v;
  }
  r.trim(m);
  return r;
}

template <class M>
MPoly<M> mp_sub(const M& m, const MPoly<M>& a, const MPoly<M>& b) {
  MPoly<M> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), m.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    typename M::V v = i < a.c.size() ? a.c[i] : m.zero();
    if (i < b.c.size()) v = m.sub(v, b.c[i]);
    r.c[i] = v;
  }
  r.trim(m);
  return r;
}

template <class M>
MPoly<M> mp_mul(const M& m, const MPoly<M>& a, const MPoly<M>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  MPoly<M> r;
  r.c.assign(a.c.size() + b.c.size() - 1, m.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (m.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = m.add(r.c[i + j], m.mul(a.c[i], b.c[j]));
  }
  r.trim(m);
  return r;
}

template <class M>
MPoly<M> mp_scale(const M& m, const MPoly<M>& a, typename M::V s) {
  MPoly<M> r = a;
  for (auto& x : r.c) x = m.mul(x, s);
  r.trim(m);
  return r;
}

template <class M>
std::pair<MPoly<M>, MPoly<M>> mp_divmod(const M& m, const MPoly<M>& a, const MPoly<M>& b) {
  SK_CHECK(!b.is_zero(), "mp division by zero");
  MPoly<M> rem = a, q;
  if (a.degree() < b.degree()) return {q, rem};
  auto inv_lb = m.inv(b.c.back());
  q.c.assign(a.degree() - b.degree() + 1, m.zero());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    auto f = m.mul(rem.c.back(), inv_lb);
    q.c[k] = f;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c[i + k] = m.sub(rem.c[i + k], m.mul(f, b.c[i]));
    rem.trim(m);
  }
  q.trim(m);
  return {q, rem};
}

template <class M>
MPoly<M> mp_mod(const M& m, const MPoly<M>& a, const MPoly<M>& b) {
  return mp_divmod(m, a, b).second;
}

template <class M>
MPoly<M> mp_monic(const M& m, const MPoly<M>& a) {
  if (a.is_zero()) return a;
  return mp_scale(m, a, m.inv(a.c.back()));
}

template <class M>
MPoly<M> mp_gcd(const M& m, MPoly<M> a, MPoly<M> b) {
  while (!b.is_zero()) {
    MPoly<M> r = mp_mod(m, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(m, a);
}

template <class M>
MPoly<M> mp_derivative(const M& m, const MPoly<M>& a) {
  MPoly<M> r;
  if (a.degree() <= 0) return r;
  r.c.resize(a.c.size() - 1);
  typename M::V k = m.zero();
  for (size_t i = 1; i < a.c.size(); ++i) {
    k = m.add(k, m.one());
    r.c[i - 1] = m.mul(a.c[i], k);
  }
  r.trim(m);
  return r;
}

// a^e mod f, e >= 0
template <class M>
MPoly<M> mp_powmod(const M& m, MPoly<M> a, Int e, const MPoly<M>& f) {
  SK_CHECK(e >= 0, "negative exponent");
  MPoly<M> r = mp_constant(m, m.one());
  a = mp_mod(m, a, f);
  while (e > 0) {
    if ((e & 1) != 0) r = mp_mod(m, mp_mul(m, r, a), f);
    a = mp_mod(m, mp_mul(m, a, a), f);
    e >>= 1;
  }
  return r;
}

namespace detail {

template <class M>
MPoly<M> mp_random(const M& m, Rng& rng, int deg_below) {
  MPoly<M> r;
  r.c.reserve(deg_below);
  for (int i = 0; i < deg_below; ++i) {
    // multiple 64-bit draws so big moduli get full-range coefficients
    Int v = 0;
    Int mod = m.modulus();
    Int acc = 1;
    while (acc < mod) {
      v = (v << 64) | Int(rng.next());
      acc <<= 64;
    }
    r.c.push_back(m.from_int(v));
  }
  r.trim(m);
  return r;
}

// split squarefree product of degree-d irreducibles; appends factors
template <class M>
void equal_degree_split(const M& m, const MPoly<M>& f, int d, Rng& rng,
                        std::vector<MPoly<M>>& out) {
  if (f.degree() == d) {
    out.push_back(mp_monic(m, f));
    return;
  }
  Int P = m.modulus();
  MPoly<M> g;
  while (true) {
    MPoly<M> a = detail::mp_random(m, rng, f.degree());
    if (a.degree() < 1) continue;
    if (P == 2) {
      // trace map: a + a^2 + a^4 + ... (d terms)
      MPoly<M> t = a, cur = a;
      for (int i = 1; i < d; ++i) {
        cur = mp_mod(m, mp_mul(m, cur, cur), f);
        t = mp_add(m, t, cur);
      }
      g = mp_gcd(m, t, f);
    } else {
      Int e = 1;
      for (int i = 0; i < d; ++i) e *= P;
      e = (e - 1) / 2;
      MPoly<M> b = mp_powmod(m, a, e, f);
      b = mp_sub(m, b, mp_constant(m, m.one()));
      g = mp_gcd(m, b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree_split(m, g, d, rng, out);
  auto [q, r] = mp_divmod(m, f, g);
  SK_CHECK(r.is_zero(), "edf split division");
  equal_degree_split(m, q, d, rng, out);
}

}  // namespace detail

// Count irreducible factors of a squarefree f over Z/p using only the
// distinct-degree stage.  May return early (with the count so far) once more
// than abort_above factors are certain; used to pick a prime whose modular
// factorization recombines cheaply.
template <class M>
int mp_ddf_count(const M& m, MPoly<M> f, int abort_above) {
  f = mp_monic(m, f);
  int count = 0;
  MPoly<M> x = mp_x(m);
  MPoly<M> h = x;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      ++count;
      break;
    }
    h = mp_powmod(m, h, m.modulus(), f);
    MPoly<M> g = mp_gcd(m, mp_sub(m, h, x), f);
    if (g.degree() > 0) {
      count += g.degree() / d;
      if (count > abort_above) return count;
      auto [q, r] = mp_divmod(m, f, g);
      SK_CHECK(r.is_zero(), "ddf division");
      f = q;
      h = mp_mod(m, h, f);
    }
  }
  return count;
}

// Factor a squarefree monic polynomial over Z/p into monic irreducibles
// (deterministic for a fixed seed).  Caller must guarantee squarefreeness.
template <class M>
std::vector<MPoly<M>> mp_factor_squarefree(const M& m, MPoly<M> f, uint64_t seed) {
  std::vector<MPoly<M>> out;
  f = mp_monic(m, f);
  if (f.degree() <= 0) return out;
  Rng rng(seed);
  // distinct-degree stage
  MPoly<M> x = mp_x(m);
  MPoly<M> h = x;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f);  // remaining part is irreducible
      break;
    }
    h = mp_powmod(m, h, m.modulus(), f);
    MPoly<M> g = mp_gcd(m, mp_sub(m, h, x), f);
    if (g.degree() > 0) {
      detail::equal_degree_split(m, g, d, rng, out);
      auto [q, r] = mp_divmod(m, f, g);
      SK_CHECK(r.is_zero(), "ddf division");
      f = q;
      h = mp_mod(m, h, f);
    }
  }
  return out;
}

}  // namespace slicekit
