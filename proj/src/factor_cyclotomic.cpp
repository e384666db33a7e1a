// Factorization over cyclotomic fields by norm reduction: shift the input so
// its norm down to Q is squarefree, factor the norm rationally, and read off
// the field factors as gcds.
#include "slicekit/factor.hpp"

namespace slicekit {

namespace {

// Lagrange interpolation through (xs[i], ys[i]) over Q
Poly<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly<Rat> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly<Rat> term = Poly<Rat>::constant(ys[i]);
    if (term.is_zero()) continue;
    Rat denom_prod(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = mul(term, Poly<Rat>(std::vector<Rat>{-xs[j], Rat(1)}));
      denom_prod *= xs[i] - xs[j];
    }
    term = scale(term, Rat(1) / denom_prod);
    acc = add(acc, term);
  }
  return acc;
}

Poly<Rat> lift_q(const Poly<Rat>& h, const CycCtx&) { return h; }

Poly<CycElem> to_cyc_poly(const Poly<Rat>& h, const CycCtx& K) {
  std::vector<CycElem> v;
  v.reserve(h.c.size());
  for (const Rat& c : h.c) v.push_back(K.from_rat(c));
  return Poly<CycElem>(std::move(v));
}

}  // namespace

Poly<Rat> norm_to_q(const Poly<CycElem>& g, const CycCtx& K) {
  SK_CHECK(!g.is_zero(), "norm of zero");
  if (K.phi == 1) {
    // the field is Q itself; read coordinates directly
    std::vector<Rat> v;
    v.reserve(g.c.size());
    for (const CycElem& c : g.c) v.push_back(c.rational_part());
    return Poly<Rat>(std::move(v));
  }
  std::vector<Rat> mp(K.phi + 1);
  for (int i = 0; i <= K.phi; ++i) mp[i] = Rat(K.min_poly[i]);
  Poly<Rat> MP(std::move(mp));

  int D = g.degree() * K.phi;
  std::vector<Rat> xs, ys;
  xs.reserve(D + 1);
  ys.reserve(D + 1);
  for (int j = 0; (int)xs.size() <= D; ++j) {
    Rat x = (j % 2 == 0) ? Rat(j / 2) : Rat(-(j / 2 + 1));
    CycElem val;
    for (int i = g.degree(); i >= 0; --i) {
      val = val * K.from_rat(x) + g.coeff(i);
    }
    Rat r;
    if (val.is_zero()) {
      r = 0;
    } else {
      Poly<Rat> A(std::vector<Rat>(val.a));
      r = resultant(MP, A);
    }
    xs.push_back(x);
    ys.push_back(r);
  }
  Poly<Rat> N = interpolate(xs, ys);
  SK_CHECK(N.degree() == D, "norm degree mismatch");
  return N;
}

std::optional<std::vector<std::pair<Poly<CycElem>, int>>> factor_poly_cyclotomic(
    const Poly<CycElem>& f, const CycCtx& K, OpBudget& budget) {
  SK_CHECK(!f.is_zero(), "factoring zero polynomial");
  std::vector<std::pair<Poly<CycElem>, int>> out;
  if (f.degree() <= 0) return out;

  Poly<CycElem> fm = make_monic(f);
  auto parts = yun_squarefree(fm);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    Poly<CycElem> w = make_monic(parts[k]);
    int mult = (int)k + 1;
    if (w.degree() == 1) {
      out.emplace_back(w, mult);
      continue;
    }

    int64_t d = w.degree();
    int64_t tries_cap = 10 * d * d * (int64_t)K.phi * K.phi + 10;
    bool done = false;
    for (int64_t s = 0; s <= tries_cap; ++s) {
      if (!budget.take((uint64_t)(d * K.phi + 1))) return std::nullopt;
      CycElem shift = s == 0 ? CycElem() : K.mul(K.from_rat(Rat(-s)), K.zeta());
      Poly<CycElem> ws = (s == 0) ? w : shift_arg(w, shift);
      Poly<Rat> N = norm_to_q(ws, K);
      if (gcd_poly(N, derivative(N)).degree() != 0) continue;

      auto qf = factor_poly_q(N, budget);
      if (!qf) return std::nullopt;
      CycElem unshift = s == 0 ? CycElem()
                               : K.mul(K.from_rat(Rat(s)), K.zeta());
      for (auto& [h, he] : qf->factors) {
        SK_CHECK(he == 1, "squarefree norm with repeated factor");
        Poly<CycElem> hk = to_cyc_poly(lift_q(h, K), K);
        Poly<CycElem> g = gcd_poly(ws, hk);
        SK_CHECK(g.degree() >= 1, "norm factor with trivial gcd");
        if (s != 0) g = shift_arg(g, unshift);
        out.emplace_back(make_monic(g), mult);
      }
      done = true;
      break;
    }
    SK_CHECK(done, "no squarefree shift found");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.degree() < b.first.degree();
  });
  return out;
}

}  // namespace slicekit
