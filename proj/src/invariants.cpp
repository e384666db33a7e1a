#include <algorithm>
#include <vector>

#include "slicekit/fox.hpp"
#include "slicekit/invariants.hpp"
#include "slicekit/normtest.hpp"
#include "slicekit/poly.hpp"

namespace slicekit {
namespace {

// Fox-calculus target: each generator maps to the Laurent variable of its
// component (1x1 abelianization)
struct MLOps {
  using Elem = MLaurent;
  int nvars = 1;
  std::vector<int> var_of;  // generator (1-based) -> variable
  OpBudget* budget = nullptr;

  Elem zero() const { return ml_zero(nvars); }
  Elem one() const { return ml_const(nvars, 1); }
  Elem image(int gen) const { return ml_monomial(nvars, var_of[gen - 1], 1); }
  Elem inv_image(int gen) const { return ml_monomial(nvars, var_of[gen - 1], -1); }
  Elem add(const Elem& a, const Elem& b) const { return slicekit::add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return slicekit::mul(a, b, budget); }
  Elem neg(const Elem& a) const { return slicekit::neg(a); }
};

AlexPoly to_alex(const MLaurent& p) {
  SK_CHECK(p.nvars <= 1, "expected a one-variable polynomial");
  if (p.is_zero()) return AlexPoly();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [e, c] : p.t) {
    int k = p.nvars ? e[0] : 0;
    lo = first ? k : std::min(lo, k);
    hi = first ? k : std::max(hi, k);
    first = false;
  }
  std::vector<Rat> cs(hi - lo + 1);
  for (const auto& [e, c] : p.t) cs[(p.nvars ? e[0] : 0) - lo] = Rat(c);
  return AlexPoly(Poly<Rat>(std::move(cs)), lo);
}

Rat eval_at_unit(const AlexPoly& p, int x) {
  SK_CHECK(x == 1 || x == -1, "only unit evaluations are defined");
  Rat v = eval_poly(p.num, Rat(x));
  if (x == -1 && (p.lo % 2 != 0)) v = -v;
  return v;
}

Int rat_to_int(const Rat& r) {
  SK_CHECK(denom(r) == 1, "expected an integer value");
  return numer(r);
}

}  // namespace

AlexPoly normalize_alexander(const AlexPoly& p) {
  if (p.is_zero()) return p;
  Poly<Rat> q = p.num;
  Int den = 1;
  for (const Rat& r : q.c) den = lcm_int(den, denom(r));
  Int num = 0;
  for (const Rat& r : q.c) num = gcd_int(num, numer(r) * (den / denom(r)));
  q = scale(q, Rat(den) / Rat(num));
  if (q.lead() < 0) q = neg(q);
  return AlexPoly(std::move(q), 0);
}

AlexPoly alexander_polynomial(const LinkDiagram& d) {
  if (d.n_components() != 1)
    throw Error(ErrKind::NotApplicable, "Alexander polynomial route needs a knot");
  IntMat v = seifert_matrix(d).v;
  int m = (int)v.size();
  if (m == 0) return AlexPoly::from_poly(Poly<Rat>::constant(Rat(1)));
  std::vector<std::vector<MLaurent>> a(m, std::vector<MLaurent>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[i][j] = add(ml_const(1, v[i][j]), ml_monomial(1, 0, 1, -v[j][i]));
  OpBudget budget;
  MlRankResult r = ml_rank(std::move(a), budget);
  SK_CHECK(r.rank == m, "V - tV^T must be nonsingular for a knot");
  AlexPoly delta = normalize_alexander(to_alex(r.last_pivot));
  Rat at1 = eval_at_unit(delta, 1);
  SK_CHECK(at1 == 1 || at1 == -1, "Alexander polynomial must evaluate to a unit at 1");
  return delta;
}

AlexPoly alexander_via_wirtinger(const LinkDiagram& d) {
  if (d.n_components() != 1)
    throw Error(ErrKind::NotApplicable, "Alexander polynomial route needs a knot");
  GroupPresentation p = wirtinger_presentation(d);
  if (p.relators_full.empty())
    return AlexPoly::from_poly(Poly<Rat>::constant(Rat(1)));
  OpBudget budget;
  MLOps ops;
  ops.nvars = 1;
  ops.var_of.assign(p.ngens, 0);
  ops.budget = &budget;
  auto jac = fox_jacobian(p.relators_full, p.ngens, ops);
  // all maximal minors of the column-deleted Jacobian of a knot agree up to
  // units, so one fraction-free elimination recovers the polynomial
  for (auto& row : jac) row.erase(row.begin());
  MlRankResult r = ml_rank(std::move(jac), budget);
  SK_CHECK(r.rank == p.ngens - 1, "knot Alexander matrix has corank one");
  return normalize_alexander(to_alex(r.last_pivot));
}

int signature(const LinkDiagram& d) {
  IntMat v = seifert_matrix(d).v;
  int m = (int)v.size();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = Rat(v[i][j] + v[j][i]);
  // congruence diagonalization; a zero diagonal entry with a live row first
  // absorbs a multiple of that row and column to become nonzero
  auto add_row_col = [&](int dst, int src, const Rat& f) {
    for (int t = 0; t < m; ++t) a[dst][t] += f * a[src][t];
    for (int t = 0; t < m; ++t) a[t][dst] += f * a[t][src];
  };
  int sig = 0;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int j = -1;
      for (int t = k + 1; t < m && j < 0; ++t)
        if (a[k][t] != 0) j = t;
      if (j < 0) continue;  // zero row: contributes nothing
      Rat f = (a[j][j] + 2 * a[k][j] != 0) ? Rat(1) : Rat(-1);
      add_row_col(k, j, f);
      SK_CHECK(a[k][k] != 0, "pivot repair failed");
    }
    const Rat dkk = a[k][k];
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) a[i][j] -= a[i][k] * a[k][j] / dkk;
    for (int i = k + 1; i < m; ++i) a[i][k] = a[k][i] = Rat(0);
    sig += dkk > 0 ? 1 : -1;
  }
  return sig;
}

Int knot_determinant(const LinkDiagram& d) {
  return abs_int(rat_to_int(eval_at_unit(alexander_polynomial(d), -1)));
}

bool fox_milnor_test(const AlexPoly& delta) {
  if (delta.is_zero())
    throw Error(ErrKind::NotApplicable, "Fox-Milnor test needs a nonzero polynomial");
  Rat at1 = eval_at_unit(delta, 1);
  if (at1 != 1 && at1 != -1)
    throw Error(ErrKind::NotApplicable, "Fox-Milnor test needs delta(1) = +-1");
  if (!is_associate(delta, bar(delta)))
    throw Error(ErrKind::NotApplicable, "Fox-Milnor test needs a symmetric polynomial");
  // necessary: |delta(-1)| = det must be a perfect square
  if (!is_perfect_square(abs_int(rat_to_int(eval_at_unit(delta, -1))))) return false;
  // decide delta = unit * f * bar(f) over Q; Gauss's lemma lifts to Z since
  // delta(1) = +-1 forces content 1
  const CycCtx& Q = cyc_ctx(1);
  std::vector<CycElem> cs(delta.num.c.size());
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = Q.from_rat(delta.num.c[i]);
  Laurent<CycElem> f(Poly<CycElem>(std::move(cs)), delta.lo);
  OpBudget budget(200'000'000);
  return is_norm(f, Q, budget);
}

bool plausibly_slice(const LinkDiagram& d) {
  if (d.n_components() != 1)
    throw Error(ErrKind::NotApplicable, "plausibly-slice filter needs a knot");
  if (signature(d) != 0) return false;
  return fox_milnor_test(alexander_polynomial(d));
}

Int branched_order_oracle(const AlexPoly& delta, int m) {
  if (m < 2) throw Error(ErrKind::NotApplicable, "cover degree must be at least 2");
  SK_CHECK(!delta.is_zero(), "order oracle needs a nonzero polynomial");
  // product of |delta| over the nontrivial m-th roots of unity, as a
  // resultant with the monic cyclotomic-product factor (x^m - 1)/(x - 1);
  // the Laurent shift multiplies the result by a root-of-unity product only
  Poly<Rat> g(std::vector<Rat>(m, Rat(1)));
  Rat r = resultant(g, delta.num);
  return abs_int(rat_to_int(r));
}

MultivariablePruneData multivariable_prune_data(const LinkDiagram& d,
                                                OpBudget& budget) {
  int mu = d.n_components();
  if (mu < 2)
    throw Error(ErrKind::NotApplicable, "link pruning needs at least two components");
  MultivariablePruneData out;
  out.first_poly = ml_zero(mu);
  try {
    GroupPresentation p = wirtinger_presentation(d);
    MLOps ops;
    ops.nvars = mu;
    ops.var_of = p.gen_component;
    ops.budget = &budget;
    auto jac = fox_jacobian(p.relators_full, p.ngens, ops);
    MlRankResult base = ml_rank(jac, budget);
    out.nullity = p.ngens - base.rank - 1;

    // first nonvanishing polynomial: gcd over rank-sized minors.  The exact
    // ideal gcd needs all minors; we sample eliminations under row/column
    // permutations and only trust the gcd once it stops changing.
    MLaurent g = base.rank == 0 ? ml_const(mu, 1) : ml_normalized(base.last_pivot);
    bool stable = base.rank == 0 || g == ml_const(mu, 1);
    Rng rng(0x5e1f3a7u);
    int quiet = 0;
    for (int s = 0; s < 8 && !stable; ++s) {
      auto perm = jac;
      rng.shuffle(perm);
      std::vector<size_t> colperm(perm.empty() ? 0 : perm[0].size());
      for (size_t i = 0; i < colperm.size(); ++i) colperm[i] = i;
      rng.shuffle(colperm);
      for (auto& row : perm) {
        auto old = row;
        for (size_t i = 0; i < colperm.size(); ++i) row[i] = old[colperm[i]];
      }
      MlRankResult sample = ml_rank(std::move(perm), budget);
      SK_CHECK(sample.rank == base.rank, "rank must not depend on ordering");
      MLaurent g2 = gcd_ml(g, sample.last_pivot, budget);
      if (is_associate(g2, g)) {
        if (++quiet >= 2) stable = true;
      } else {
        quiet = 0;
      }
      g = std::move(g2);
      if (g == ml_const(mu, 1)) stable = true;
    }
    out.first_poly = g;
    out.indeterminate = !stable;

    if (out.nullity != mu - 1) {
      out.fox_milnor_link = false;
    } else if (out.indeterminate) {
      out.fox_milnor_link = true;  // sound: never prune on an unsettled gcd
    } else {
      out.fox_milnor_link = is_perfect_square(abs_int(eval_all(g, Int(-1))));
    }
  } catch (const Error& e) {
    if (e.kind != ErrKind::Budget) throw;
    out.indeterminate = true;
    out.fox_milnor_link = true;
    out.nullity = -1;
    out.first_poly = ml_zero(mu);
  }
  return out;
}

}  // namespace slicekit
