// Dense univariate polynomials and Laurent polynomials over an exact field.
//
// The coefficient type F must be an exact field: default-constructed value is
// zero, F supports + - * / ==, and one_like(sample) produces 1 in the same
// field instance.  Rat satisfies this; CycElem (cyclotomic field elements)
// provides its own overloads.
#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "slicekit/numbers.hpp"

namespace slicekit {

inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat coeff_conj(const Rat& x) { return x; }

template <class F>
struct Poly {
  std::vector<F> c;  // c[i] = coefficient of x^i; invariant: back() != 0 unless empty

  Poly() = default;
  explicit Poly(std::vector<F> v) : c(std::move(v)) { trim(); }
  static Poly constant(const F& x) {
    Poly p;
    if (!(x == F())) p.c.push_back(x);
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == F()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  const F& lead() const { SK_CHECK(!c.empty(), "lead of zero poly"); return c.back(); }
  F coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : F(); }
  bool operator==(const Poly& o) const { return c == o.c; }
};

template <class F>
Poly<F> add(const Poly<F>& a, const Poly<F>& b) {
  std::vector<F> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c.size()) r[i] = r[i] + a.c[i];
    if (i < b.c.size()) r[i] = r[i] + b.c[i];
  }
  return Poly<F>(std::move(r));
}

template <class F>
Poly<F> neg(const Poly<F>& a) {
  std::vector<F> r = a.c;
  for (auto& x : r) x = F() - x;
  return Poly<F>(std::move(r));
}

template <class F>
Poly<F> sub(const Poly<F>& a, const Poly<F>& b) { return add(a, neg(b)); }

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<F>();
  std::vector<F> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == F()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == F()) continue;
      r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
  }
  return Poly<F>(std::move(r));
}

template <class F>
Poly<F> scale(const Poly<F>& a, const F& s) {
  std::vector<F> r = a.c;
  for (auto& x : r) x = x * s;
  return Poly<F>(std::move(r));
}

template <class F>
Poly<F> mul_xk(const Poly<F>& a, int k) {
  SK_CHECK(k >= 0, "mul_xk negative");
  if (a.is_zero()) return a;
  std::vector<F> r(a.c.size() + k);
  for (size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
  return Poly<F>(std::move(r));
}

// Returns (quotient, remainder) with deg rem < deg b.  b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  SK_CHECK(!b.is_zero(), "division by zero poly");
  Poly<F> rem = a;
  if (a.degree() < b.degree()) return {Poly<F>(), rem};
  F one = one_like(b.lead());
  F inv_lb = one / b.lead();
  std::vector<F> q(a.degree() - b.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    F f = rem.lead() * inv_lb;
    q[k] = f;
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + k] = rem.c[i + k] - f * b.c[i];
    rem.trim();
  }
  return {Poly<F>(std::move(q)), rem};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).second; }

template <class F>
std::optional<Poly<F>> divide_exact(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

template <class F>
Poly<F> make_monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  F one = one_like(a.lead());
  F s = one / a.lead();
  return scale(a, s);
}

template <class F>
Poly<F> gcd_poly(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = make_monic(b);  // keeps coefficient growth in check
  }
  return a.is_zero() ? a : make_monic(a);
}

// returns (g, s, t) with g = gcd monic and s*a + t*b = g
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd_poly(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  F one;
  if (!a.is_zero()) one = one_like(a.lead());
  else if (!b.is_zero()) one = one_like(b.lead());
  else return {Poly<F>(), Poly<F>(), Poly<F>()};
  Poly<F> s0 = Poly<F>::constant(one), s1;
  Poly<F> t0, t1 = Poly<F>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1); r1 = std::move(r);
    Poly<F> s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1); s1 = std::move(s2);
    Poly<F> t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1); t1 = std::move(t2);
  }
  F inv_lead = one / r0.lead();
  return {scale(r0, inv_lead), scale(s0, inv_lead), scale(t0, inv_lead)};
}

template <class F>
Poly<F> derivative(const Poly<F>& a) {
  if (a.degree() <= 0) return Poly<F>();
  std::vector<F> r(a.c.size() - 1);
  F one = one_like(a.c.back());
  F k = F();
  for (size_t i = 1; i < a.c.size(); ++i) {
    k = k + one;
    r[i - 1] = a.c[i] * k;
  }
  return Poly<F>(std::move(r));
}

template <class F>
F eval_poly(const Poly<F>& a, const F& x) {
  F r = F();
  for (int i = a.degree(); i >= 0; --i) r = r * x + a.c[i];
  return r;
}

// a(x) -> a(x + s) for integer shift s (used by Trager's reduction).
template <class F>
Poly<F> shift_arg(const Poly<F>& a, const F& s) {
  Poly<F> r;
  Poly<F> lin(std::vector<F>{s, one_like(s)});  // x + s
  for (int i = a.degree(); i >= 0; --i) {
    r = mul(r, lin);
    r = add(r, Poly<F>::constant(a.c[i]));
  }
  return r;
}

// resultant via polynomial remainder sequence
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
  SK_CHECK(!a.is_zero() && !b.is_zero(), "resultant with zero input");
  F res = one_like(a.lead());
  bool negate = false;
  while (true) {
    if (b.degree() == 0) {
      F r = res;
      F lb = b.c[0];
      for (int i = 0; i < a.degree(); ++i) r = r * lb;
      if (negate) r = F() - r;
      return r;
    }
    Poly<F> rem = poly_mod(a, b);
    if (rem.is_zero()) return F();  // common factor
    int da = a.degree(), db = b.degree(), dr = rem.degree();
    for (int i = 0; i < da - dr; ++i) res = res * b.lead();
    if ((da & 1) && (db & 1)) negate = !negate;
    a = std::move(b);
    b = std::move(rem);
  }
}

// Yun's squarefree decomposition (characteristic 0): f = prod_i out[i]^(i+1),
// with the out[i] pairwise coprime and squarefree (some may be constant 1).
template <class F>
std::vector<Poly<F>> yun_squarefree(const Poly<F>& f) {
  std::vector<Poly<F>> out;
  if (f.degree() <= 0) return out;
  Poly<F> fp = derivative(f);
  Poly<F> g = gcd_poly(f, fp);
  Poly<F> w = *divide_exact(f, g);
  Poly<F> y = *divide_exact(fp, g);
  Poly<F> z = sub(y, derivative(w));
  while (!z.is_zero()) {
    Poly<F> h = gcd_poly(w, z);
    out.push_back(h);
    w = *divide_exact(w, h);
    y = *divide_exact(z, h);
    z = sub(y, derivative(w));
  }
  out.push_back(w);
  return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  if (f.degree() <= 0) return make_monic(f);
  return make_monic(*divide_exact(f, gcd_poly(f, derivative(f))));
}

// ------------------------------------------------------------ Laurent

// value = x^lo * num, with num.coeff(0) != 0 unless zero.
template <class F>
struct Laurent {
  Poly<F> num;
  int lo = 0;

  Laurent() = default;
  Laurent(Poly<F> p, int l) : num(std::move(p)), lo(l) { normalize(); }
  static Laurent from_poly(Poly<F> p) { return Laurent(std::move(p), 0); }
  static Laurent monomial(const F& coef, int e) {
    return Laurent(Poly<F>::constant(coef), e);
  }

  void normalize() {
    if (num.is_zero()) { lo = 0; return; }
    size_t k = 0;
    while (k < num.c.size() && num.c[k] == F()) ++k;
    if (k > 0) {
      num.c.erase(num.c.begin(), num.c.begin() + k);
      lo += (int)k;
    }
  }
  bool is_zero() const { return num.is_zero(); }
  int min_exp() const { return lo; }
  int max_exp() const { return lo + num.degree(); }
  F coeff(int e) const { return num.coeff(e - lo); }
  bool operator==(const Laurent& o) const { return lo == o.lo && num == o.num; }
};

template <class F>
Laurent<F> add(const Laurent<F>& a, const Laurent<F>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  return Laurent<F>(add(mul_xk(a.num, a.lo - lo), mul_xk(b.num, b.lo - lo)), lo);
}

template <class F>
Laurent<F> sub(const Laurent<F>& a, const Laurent<F>& b) {
  Laurent<F> nb(neg(b.num), b.lo);
  return add(a, nb);
}

template <class F>
Laurent<F> mul(const Laurent<F>& a, const Laurent<F>& b) {
  return Laurent<F>(mul(a.num, b.num), a.lo + b.lo);
}

// bar involution: conjugate coefficients and substitute x -> 1/x.
template <class F>
Laurent<F> bar(const Laurent<F>& a) {
  if (a.is_zero()) return a;
  std::vector<F> r(a.num.c.size());
  for (size_t i = 0; i < r.size(); ++i) r[r.size() - 1 - i] = coeff_conj(a.num.c[i]);
  return Laurent<F>(Poly<F>(std::move(r)), -a.max_exp());
}

template <class F>
std::optional<Laurent<F>> divide_exact(const Laurent<F>& a, const Laurent<F>& b) {
  SK_CHECK(!b.is_zero(), "laurent division by zero");
  if (a.is_zero()) return Laurent<F>();
  auto q = divide_exact(a.num, b.num);
  if (!q) return std::nullopt;
  return Laurent<F>(std::move(*q), a.lo - b.lo);
}

// Associate test in F[x^, x^-1]: a = unit * b with unit = c * x^k, c in F^*.
template <class F>
bool is_associate(const Laurent<F>& a, const Laurent<F>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.num.degree() != b.num.degree()) return false;
  F s = a.num.lead() / b.num.lead();
  return a.num == scale(b.num, s);
}

}  // namespace slicekit
