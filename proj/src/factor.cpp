#include "slicekit/factor.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>

namespace slicekit {

Int content_int(const std::vector<Int>& coeffs) {
  Int g = 0;
  for (const Int& c : coeffs) g = gcd_int(g, c);
  return g;
}

std::pair<std::vector<Int>, Rat> to_primitive_int(const Poly<Rat>& f) {
  if (f.is_zero()) return {{}, Rat(0)};
  Int den = 1;
  for (const Rat& c : f.c) den = lcm_int(den, denom(c));
  std::vector<Int> v;
  v.reserve(f.c.size());
  for (const Rat& c : f.c) v.push_back(numer(c) * (den / denom(c)));
  Int g = content_int(v);
  if (v.back() < 0) g = -g;
  for (Int& c : v) c /= g;
  return {v, Rat(g, den)};
}

Poly<Rat> poly_from_int(const std::vector<Int>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const Int& c : coeffs) v.emplace_back(c);
  return Poly<Rat>(std::move(v));
}

namespace {

uint64_t coeff_seed(const std::vector<Int>& f) {
  std::string s;
  for (const Int& c : f) { s += c.str(); s += ','; }
  std::string h = sha256_hex(s);
  return std::stoull(h.substr(0, 16), nullptr, 16);
}

Int next_prime_above(Int n) {
  if (n < 2) return 2;
  Int p = n + 1;
  if (p % 2 == 0) ++p;
  while (!boost::multiprecision::miller_rabin_test(p, 40)) p += 2;
  return p;
}

std::vector<Int> symmetric_lift(const BigMod& m, const MPoly<BigMod>& f) {
  std::vector<Int> v;
  v.reserve(f.c.size());
  Int half = m.p / 2;
  for (const Int& c : f.c) v.push_back(c > half ? Int(c - m.p) : c);
  return v;
}

// exact division of integer polynomials with early abort; nullopt if the
// quotient fails to stay integral or a nonzero remainder appears
std::optional<std::vector<Int>> divide_int_exact(const std::vector<Int>& a,
                                                 const std::vector<Int>& b) {
  if (a.size() < b.size()) return std::nullopt;
  std::vector<Int> rem = a;
  std::vector<Int> q(a.size() - b.size() + 1);
  const Int& lead = b.back();
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    Int top = rem[k + b.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int f = top / lead;
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return q;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int r = 0;
  for (int i = (int)f.size() - 1; i >= 0; --i) r = r * x + f[i];
  return r;
}

// factor a squarefree primitive integer polynomial (positive lead, deg >= 1)
std::optional<std::vector<std::vector<Int>>> factor_squarefree_z(std::vector<Int> f,
                                                                 OpBudget& budget) {
  std::vector<std::vector<Int>> out;
  if (f[0] == 0) {  // peel the factor x (squarefree, so it appears once)
    out.push_back({0, 1});
    f.erase(f.begin());
  }
  if (f.size() <= 2) {
    if (f.size() == 2) out.push_back(f);
    return out;
  }

  // coefficient bound for lc(f) * (any monic-image factor of f)
  Int norm2 = 0;
  for (const Int& c : f) norm2 += c * c;
  Int bound = (isqrt_int(norm2) + 1) * abs_int(f.back());
  bound <<= (int)f.size();  // 2^deg covers binomial growth with margin

  // The number of modular factors drives the recombination cost, and it
  // varies with the prime (it is the Frobenius cycle count), so probe a few
  // squarefree primes and keep the one that splits f the least.
  const int deg = (int)f.size() - 1;
  uint64_t seed = coeff_seed(f);
  Int p = bound * 2 + 1;
  Int best_p = 0;
  int best_count = deg + 1;
  int probes = 0;
  for (int attempt = 0; attempt < 64 && probes < 10; ++attempt) {
    p = next_prime_above(p);
    BigMod probe(p);
    MPoly<BigMod> fm = mp_from(probe, f);
    if (fm.degree() != deg) continue;  // p | lc, impossible here but cheap
    if (mp_gcd(probe, fm, mp_derivative(probe, fm)).degree() != 0) continue;
    ++probes;
    int cnt = mp_ddf_count(probe, fm, best_count);
    if (cnt < best_count) {
      best_count = cnt;
      best_p = p;
    }
    if (best_count <= std::max(4, deg / 4)) break;
    if (!budget.take((uint64_t)deg)) return std::nullopt;
  }
  SK_CHECK(best_p != 0, "squarefree poly has no good prime");
  BigMod ctx(best_p);
  if (best_count == 1) {
    out.push_back(f);
    return out;
  }
  std::vector<MPoly<BigMod>> modular =
      mp_factor_squarefree(ctx, mp_from(ctx, f), seed);

  // subset recombination: smallest subsets first so emitted factors are
  // irreducible; candidates are screened by evaluations at 0 and +-1 before
  // any trial division
  std::sort(modular.begin(), modular.end(),
            [](const MPoly<BigMod>& a, const MPoly<BigMod>& b) {
              return a.c < b.c;
            });
  std::vector<int> alive(modular.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = (int)i;

  const Int pts[3] = {Int(0), Int(1), Int(-1)};
  std::vector<std::array<Int, 3>> hval(modular.size());
  for (size_t i = 0; i < modular.size(); ++i)
    for (int t = 0; t < 3; ++t) {
      Int v = 0;
      for (int k = modular[i].degree(); k >= 0; --k)
        v = ctx.from_int(v * pts[t] + modular[i].c[k]);
      hval[i][t] = v;
    }
  std::array<Int, 3> fval;
  auto refresh_fval = [&]() {
    for (int t = 0; t < 3; ++t) fval[t] = eval_int(f, pts[t]) * f.back();
  };
  refresh_fval();

  auto lift_scalar = [&](const Int& v) {
    return v > ctx.p / 2 ? Int(v - ctx.p) : v;
  };

  for (int card = 1; (int)alive.size() >= 2 * card; ) {
    bool found = false;
    std::vector<int> pick(card);
    for (int i = 0; i < card; ++i) pick[i] = i;
    while (true) {
      if (!budget.take()) return std::nullopt;
      bool plausible = true;
      for (int t = 0; t < 3 && plausible; ++t) {
        if (fval[t] == 0) continue;  // f vanishes there; no information
        Int v = ctx.from_int(f.back());
        for (int i : pick) v = ctx.mul(v, hval[alive[i]][t]);
        Int lv = lift_scalar(v);
        if (lv == 0 || fval[t] % lv != 0) plausible = false;
      }
      if (plausible) {
        MPoly<BigMod> prod = mp_constant(ctx, ctx.from_int(f.back()));
        for (int i : pick) prod = mp_mul(ctx, prod, modular[alive[i]]);
        std::vector<Int> cand = symmetric_lift(ctx, prod);
        Int g = content_int(cand);
        if (cand.back() < 0) g = -g;
        for (Int& c : cand) c /= g;
        if (auto q = divide_int_exact(f, cand)) {
          out.push_back(cand);
          f = *q;
          SK_CHECK(f.back() > 0, "sign drift in recombination");
          refresh_fval();
          std::vector<int> keep;
          for (size_t i = 0; i < alive.size(); ++i)
            if (std::find(pick.begin(), pick.end(), (int)i) == pick.end())
              keep.push_back(alive[i]);
          alive = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      int i = card - 1;
      while (i >= 0 && pick[i] == (int)alive.size() - card + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++card;
  }
  if ((int)f.size() - 1 > 0) out.push_back(f);
  return out;
}

}  // namespace

std::optional<QFactorization> factor_poly_q(const Poly<Rat>& f, OpBudget& budget) {
  SK_CHECK(!f.is_zero(), "factoring zero polynomial");
  QFactorization res;
  auto [prim, unit] = to_primitive_int(f);
  res.unit = unit;
  if ((int)prim.size() - 1 <= 0) return res;

  // Yun reconstitutes the input only for monic polynomials, so peel the lead
  res.unit = res.unit * Rat(prim.back());
  Poly<Rat> monic_f = scale(poly_from_int(prim), Rat(1, prim.back()));
  auto parts = yun_squarefree(monic_f);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    auto [pint, punit] = to_primitive_int(parts[k]);
    Rat u = punit;
    for (int e = 0; e < (int)k; ++e) u = u * punit;
    res.unit = res.unit * u;
    auto irr = factor_squarefree_z(pint, budget);
    if (!irr) return std::nullopt;
    for (auto& g : *irr) res.factors.emplace_back(poly_from_int(g), (int)k + 1);
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.c < b.first.c;
            });
  return res;
}

std::vector<int> cyclotomic_coset_sizes(int64_t m, int64_t q) {
  std::vector<int> sizes;
  std::vector<char> seen(m, 0);
  for (int64_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    int n = 0;
    int64_t x = s;
    do {
      seen[x] = 1;
      ++n;
      x = (__int128)x * q % m;
    } while (x != s);
    sizes.push_back(n);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<MPoly<SmallMod>> factor_xm1_mod_q(int64_t m, int64_t q) {
  SK_CHECK(m >= 1 && q >= 2, "bad x^m-1 parameters");
  SK_CHECK(m % q != 0, "x^m-1 requires gcd(m,q)=1");
  SmallMod ctx(q);
  MPoly<SmallMod> f;
  f.c.assign(m + 1, 0);
  f.c[0] = ctx.neg(ctx.one());
  f.c[m] = ctx.one();
  uint64_t seed = 0x9e3779b97f4a7c15ull ^ (uint64_t)m * 0x100000001b3ull ^ (uint64_t)q;
  auto factors = mp_factor_squarefree(ctx, f, seed);

  // the factorization must mirror the q-cyclotomic coset structure mod m
  std::vector<int> degs;
  degs.reserve(factors.size());
  for (auto& g : factors) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  SK_CHECK(degs == cyclotomic_coset_sizes(m, q), "x^m-1 factor degrees disagree with cosets");

  std::sort(factors.begin(), factors.end(),
            [](const MPoly<SmallMod>& a, const MPoly<SmallMod>& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.c < b.c;
            });
  return factors;
}

}  // namespace slicekit
