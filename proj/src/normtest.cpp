#include "slicekit/normtest.hpp"

#include <functional>

namespace slicekit {

int d_bound(int degree) {
  static const int table[15] = {1, 2, 2, 3, 3, 3, 2, 4, 4, 4, 2, 4, 3, 3, 4};
  if (degree < 2 || degree > 30 || degree % 2 != 0)
    throw Error(ErrKind::NotApplicable, "degree outside the 2..30 even table");
  return table[degree / 2 - 1];
}

Laurent<CycElem> laurent_of(const Poly<CycElem>& p) {
  return Laurent<CycElem>(p, 0);
}

bool self_bar_associate(const Poly<CycElem>& p) {
  Laurent<CycElem> l = laurent_of(p);
  return is_associate(l, bar(l));
}

namespace {

struct FactorClass {
  Poly<CycElem> p;
  int mult;
  bool self_bar;
  int partner;  // index with bar(p) an associate of factors[partner].p, or -1
};

std::vector<FactorClass> classify(const std::vector<std::pair<Poly<CycElem>, int>>& factors) {
  std::vector<FactorClass> out;
  out.reserve(factors.size());
  for (auto& [p, e] : factors) out.push_back({p, e, false, -1});
  for (size_t i = 0; i < out.size(); ++i) {
    Laurent<CycElem> bi = bar(laurent_of(out[i].p));
    if (is_associate(bi, laurent_of(out[i].p))) {
      out[i].self_bar = true;
      continue;
    }
    for (size_t j = 0; j < out.size(); ++j) {
      if (j == i) continue;
      if (is_associate(bi, laurent_of(out[j].p))) {
        out[i].partner = (int)j;
        break;
      }
    }
  }
  return out;
}

bool norm_conditions(const std::vector<FactorClass>& classes,
                     // invoked for self-bar factors of odd multiplicity;
                     // decides whether that single factor is itself a norm
                     const std::function<bool(const Poly<CycElem>&)>& odd_self_case) {
  for (const auto& fc : classes) {
    if (fc.self_bar) {
      if (fc.mult % 2 == 0) continue;
      if (!odd_self_case(fc.p)) return false;
      continue;
    }
    if (fc.partner < 0) return false;              // bar-image absent entirely
    if (classes[fc.partner].mult != fc.mult) return false;
  }
  return true;
}

}  // namespace

bool is_norm(const Laurent<CycElem>& f, const CycCtx& K, OpBudget& budget) {
  SK_CHECK(!f.is_zero(), "norm test on zero");
  auto factors = factor_poly_cyclotomic(f.num, K, budget);
  if (!factors) throw budget_error("factorization budget exhausted in norm test");
  auto classes = classify(*factors);
  return norm_conditions(classes, [](const Poly<CycElem>&) { return false; });
}

bool is_norm_two_tower(const Laurent<CycElem>& f, int n, OpBudget& budget) {
  SK_CHECK(!f.is_zero(), "norm test on zero");
  SK_CHECK(n >= 1, "tower base exponent must be >= 1");
  int conductor = 1 << n;
  const CycCtx& K = cyc_ctx(conductor);

  // coefficients may live in a smaller 2-power field; embed them into K
  std::vector<CycElem> lifted;
  lifted.reserve(f.num.c.size());
  for (const CycElem& c : f.num.c) lifted.push_back(K.embed(c));
  Laurent<CycElem> fk(Poly<CycElem>(std::move(lifted)), f.lo);

  auto factors = factor_poly_cyclotomic(fk.num, K, budget);
  if (!factors) throw budget_error("factorization budget exhausted in norm test");
  auto classes = classify(*factors);

  auto odd_self_case = [&](const Poly<CycElem>& p) -> bool {
    // an odd-degree polynomial is never (unit)*g*bar(g): the exponent span
    // of such a product is even
    if (p.degree() % 2 != 0) return false;
    int d;
    try {
      d = d_bound(p.degree());
    } catch (const Error&) {
      throw budget_error("norm test factor degree outside the Galois-bound table");
    }
    int ell = n + d + 1;
    const CycCtx& L = cyc_ctx(1 << ell);
    std::vector<CycElem> up;
    up.reserve(p.c.size());
    for (const CycElem& c : p.c) up.push_back(L.embed(c));
    Poly<CycElem> pl(std::move(up));
    auto lf = factor_poly_cyclotomic(pl, L, budget);
    if (!lf) throw budget_error("factorization budget exhausted in tower norm test");
    // p is irreducible over K, so its factors over the Galois extension L form
    // a single orbit: either all are self-bar-associate or none is.  One
    // factor decides, but verifying the multiplicity-1 structure is cheap.
    for (auto& [q, e] : *lf)
      SK_CHECK(e == 1, "irreducible factor acquired multiplicity in extension");
    return !self_bar_associate(lf->front().first);
  };
  return norm_conditions(classes, odd_self_case);
}

}  // namespace slicekit
