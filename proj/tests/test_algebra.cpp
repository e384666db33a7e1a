#include "doctest.h"

#include "slicekit/cyclotomic.hpp"
#include "slicekit/factor.hpp"
#include "slicekit/numbers.hpp"
#include "slicekit/poly.hpp"
#include "slicekit/snf.hpp"

using namespace slicekit;

namespace {

Poly<Rat> qpoly(std::initializer_list<int> coeffs) {
  std::vector<Rat> v;
  for (int c : coeffs) v.emplace_back(c);
  return Poly<Rat>(std::move(v));
}

Poly<Rat> reassemble(const QFactorization& f) {
  Poly<Rat> acc = Poly<Rat>::constant(f.unit);
  for (const auto& [p, e] : f.factors)
    for (int i = 0; i < e; ++i) acc = mul(acc, p);
  return acc;
}

}  // namespace

TEST_CASE("integer utilities") {
  CHECK(is_prime_u64(2305843009213693951ull));
  CHECK(!is_prime_u64(2305843009213693953ull));
  uint64_t p;
  int k;
  CHECK(prime_power_decompose(27, &p, &k));
  CHECK(p == 3);
  CHECK(k == 3);
  CHECK(prime_power_decompose(1024, &p, &k));
  CHECK(p == 2);
  CHECK(k == 10);
  CHECK(!prime_power_decompose(12, &p, &k));
  CHECK(!prime_power_decompose(1, &p, &k));
  CHECK(isqrt_int(Int(152399025)) == 12345);
  Int root;
  CHECK(is_perfect_square(Int(152399025), &root));
  CHECK(!is_perfect_square(Int(152399026), &root));
  CHECK(valuation(Int(-48), Int(2)) == 4);
}

TEST_CASE("string hashing is stable") {
  // FIPS-180 test vector
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("deterministic rng") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  for (int i = 0; i < 1000; ++i) {
    uint64_t v = c.below(7);
    CHECK(v < 7);
  }
}

TEST_CASE("polynomial division and gcd over Q") {
  auto f = qpoly({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
  auto g = qpoly({2, -3, 1});       // (t-1)(t-2)
  auto [q, r] = divmod(f, g);
  CHECK(r.is_zero());
  CHECK(q == qpoly({-3, 1}));
  CHECK(gcd_poly(f, g) == make_monic(g));
  auto [gg, s, t] = ext_gcd_poly(f, g);
  CHECK(add(mul(s, f), mul(t, g)) == gg);
}

TEST_CASE("resultants") {
  CHECK(resultant(qpoly({-2, 1}), qpoly({-3, 1})) == Rat(-1));
  // shared root forces zero
  CHECK(resultant(qpoly({-1, 0, 1}), qpoly({-1, 1})) == Rat(0));
  // res(x^2+1, x-1) = 1^2+1 = 2
  CHECK(resultant(qpoly({1, 0, 1}), qpoly({-1, 1})) == Rat(2));
}

TEST_CASE("squarefree decomposition") {
  // f = (t-1)^2 (t^2+1)
  auto f = mul(mul(qpoly({-1, 1}), qpoly({-1, 1})), qpoly({1, 0, 1}));
  auto parts = yun_squarefree(f);
  REQUIRE(parts.size() == 2);
  CHECK(make_monic(parts[0]) == qpoly({1, 0, 1}));
  CHECK(make_monic(parts[1]) == qpoly({-1, 1}));
  CHECK(squarefree_part(f) == make_monic(mul(qpoly({-1, 1}), qpoly({1, 0, 1}))));
}

TEST_CASE("laurent arithmetic and the bar involution") {
  using L = Laurent<Rat>;
  L f(qpoly({-1, 2}), 0);  // 2t - 1
  L barf = bar(f);         // 2/t - 1
  CHECK(barf.min_exp() == -1);
  CHECK(barf.coeff(-1) == Rat(2));
  CHECK(barf.coeff(0) == Rat(-1));
  // bar(2t-1) is an associate of (t-2)
  CHECK(is_associate(barf, L(qpoly({-2, 1}), 0)));
  CHECK(!is_associate(f, L(qpoly({-2, 1}), 0)));
  // involution
  CHECK(bar(barf) == f);
  // multiplicativity
  L g(qpoly({3, 0, 1}), -2);
  CHECK(bar(mul(f, g)) == mul(bar(f), bar(g)));
  auto q = divide_exact(mul(f, g), g);
  REQUIRE(q.has_value());
  CHECK(*q == f);
}

TEST_CASE("rational factorization splits integer quadratics") {
  OpBudget budget(1u << 20);
  auto f = qpoly({2, -5, 2});
  auto fac = factor_poly_q(f, budget);
  REQUIRE(fac.has_value());
  REQUIRE(fac->factors.size() == 2);
  CHECK(fac->unit == Rat(1));
  CHECK(fac->factors[0].first == qpoly({-2, 1}));   // t - 2
  CHECK(fac->factors[0].second == 1);
  CHECK(fac->factors[1].first == qpoly({-1, 2}));   // 2t - 1
  CHECK(reassemble(*fac) == f);
}

TEST_CASE("rational factorization with multiplicities and units") {
  OpBudget budget(1u << 20);
  // f = 3 (t-2)^2 (2t-1)
  auto f = scale(mul(mul(qpoly({-2, 1}), qpoly({-2, 1})), qpoly({-1, 2})), Rat(3));
  auto fac = factor_poly_q(f, budget);
  REQUIRE(fac.has_value());
  CHECK(reassemble(*fac) == f);
  int total = 0;
  for (auto& [p, e] : fac->factors) total += e * p.degree();
  CHECK(total == 3);
}

TEST_CASE("rational irreducibility of symmetric quartics") {
  OpBudget budget(1u << 20);
  auto f = qpoly({1, 0, 4, 0, 1});  // t^4 + 4t^2 + 1
  auto fac = factor_poly_q(f, budget);
  REQUIRE(fac.has_value());
  REQUIRE(fac->factors.size() == 1);
  CHECK(fac->factors[0].first == f);
  CHECK(fac->factors[0].second == 1);

  auto g = qpoly({1, -3, 1});  // t^2 - 3t + 1
  auto gfac = factor_poly_q(g, budget);
  REQUIRE(gfac.has_value());
  CHECK(gfac->factors.size() == 1);
}

TEST_CASE("rational factorization of a dense degree-8 product") {
  OpBudget budget(1u << 22);
  auto f = mul(mul(qpoly({1, 3, 1, 2}), qpoly({-1, 1, 7, 1})), qpoly({5, 1}));
  auto fac = factor_poly_q(f, budget);
  REQUIRE(fac.has_value());
  CHECK(reassemble(*fac) == f);
  CHECK(fac->factors.size() == 3);
}

TEST_CASE("cyclotomic polynomials and contexts") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_poly(8) == std::vector<Int>({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(12) == std::vector<Int>({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(9) == std::vector<Int>({1, 0, 0, 1, 0, 0, 1}));

  const CycCtx& K8 = cyc_ctx(8);
  CycElem z = K8.zeta();
  CycElem z4 = K8.mul(K8.mul(z, z), K8.mul(z, z));
  CHECK(z4 == K8.from_rat(Rat(-1)));
  CHECK(K8.mul(z, K8.conj(z)) == K8.one());
  // (z + z^3)^2 = -2
  CycElem w = K8.add(z, K8.zeta(3));
  CHECK(K8.mul(w, w) == K8.from_rat(Rat(-2)));
  // inverse of 1 + zeta_4 is (1 - zeta_4)/2
  const CycCtx& K4 = cyc_ctx(4);
  CycElem u = K4.add(K4.one(), K4.zeta());
  CycElem ui = K4.inv(u);
  CHECK(K4.mul(u, ui) == K4.one());
  CHECK(ui == K4.mul(K4.from_rat(Rat(1, 2)), K4.sub(K4.one(), K4.zeta())));
  // galois vs embed: zeta_4 inside conductor 8 is zeta_8^2
  CHECK(K8.embed(K4.zeta()) == K8.zeta(2));
}

TEST_CASE("norms down to Q") {
  const CycCtx& K4 = cyc_ctx(4);
  std::vector<CycElem> gc = {K4.neg(K4.zeta()), K4.one()};  // t - zeta_4
  Poly<CycElem> g(std::move(gc));
  Poly<Rat> N = norm_to_q(g, K4);
  CHECK(N == qpoly({1, 0, 1}));
}

TEST_CASE("cyclotomic factorization splits t^2+1 at conductor 4") {
  OpBudget budget(1u << 22);
  const CycCtx& K = cyc_ctx(4);
  std::vector<CycElem> fc = {K.one(), CycElem(), K.one()};
  Poly<CycElem> f(std::move(fc));
  auto fac = factor_poly_cyclotomic(f, K, budget);
  REQUIRE(fac.has_value());
  REQUIRE(fac->size() == 2);
  // roots are +-zeta_4
  for (auto& [g, e] : *fac) {
    CHECK(e == 1);
    CHECK(g.degree() == 1);
    CycElem root = K.neg(g.coeff(0));
    CHECK((root == K.zeta() || root == K.neg(K.zeta())));
  }
}

TEST_CASE("cyclotomic factorization splits symmetric quartics at conductor 8") {
  OpBudget budget(1u << 24);
  const CycCtx& K = cyc_ctx(8);
  // t^4 + 4t^2 + 1 = (t^2 + w t + 1)(t^2 - w t + 1) with w = z + z^3
  std::vector<CycElem> fc = {K.one(), CycElem(), K.from_rat(Rat(4)), CycElem(), K.one()};
  Poly<CycElem> f(std::move(fc));
  auto fac = factor_poly_cyclotomic(f, K, budget);
  REQUIRE(fac.has_value());
  REQUIRE(fac->size() == 2);
  CycElem w = K.add(K.zeta(), K.zeta(3));
  for (auto& [g, e] : *fac) {
    CHECK(e == 1);
    REQUIRE(g.degree() == 2);
    CHECK(g.coeff(0) == K.one());
    CHECK((g.coeff(1) == w || g.coeff(1) == K.neg(w)));
  }
  // reassemble
  Poly<CycElem> prod = Poly<CycElem>::constant(K.one());
  for (auto& [g, e] : *fac)
    for (int i = 0; i < e; ++i) prod = mul(prod, g);
  CHECK(prod == f);
}

TEST_CASE("cyclotomic factorization keeps t^2-3t+1 whole at conductor 8") {
  OpBudget budget(1u << 24);
  const CycCtx& K = cyc_ctx(8);
  std::vector<CycElem> fc = {K.one(), K.from_rat(Rat(-3)), K.one()};
  Poly<CycElem> f(std::move(fc));
  auto fac = factor_poly_cyclotomic(f, K, budget);
  REQUIRE(fac.has_value());
  REQUIRE(fac->size() == 1);
  CHECK((*fac)[0].first.degree() == 2);
  CHECK((*fac)[0].second == 1);
}

TEST_CASE("finite field factorization of x^m - 1") {
  CHECK(cyclotomic_coset_sizes(3, 2) == std::vector<int>({1, 2}));
  CHECK(cyclotomic_coset_sizes(5, 7) == std::vector<int>({1, 4}));
  CHECK(cyclotomic_coset_sizes(9, 2) == std::vector<int>({1, 2, 6}));

  auto f32 = factor_xm1_mod_q(3, 2);
  CHECK(f32.size() == 2);
  auto f57 = factor_xm1_mod_q(5, 7);
  CHECK(f57.size() == 2);
  auto f92 = factor_xm1_mod_q(9, 2);
  CHECK(f92.size() == 3);

  // reassemble mod q
  SmallMod ctx(7);
  MPoly<SmallMod> prod = mp_constant(ctx, ctx.one());
  for (auto& g : f57) prod = mp_mul(ctx, prod, g);
  MPoly<SmallMod> expect;
  expect.c = {ctx.neg(ctx.one()), 0, 0, 0, 0, ctx.one()};
  CHECK(mp_eq(prod, expect));
}

TEST_CASE("integer smith normal form") {
  {
    IntMat A = {{2, 0}, {0, 3}};
    auto s = snf_int(A);
    CHECK(s.rank == 2);
    CHECK(s.diag == std::vector<Int>({1, 6}));
    // transforms really diagonalize
    IntMat D = mat_mul_int(mat_mul_int(s.U, A), s.V);
    CHECK(D[0][0] == 1);
    CHECK(D[1][1] == 6);
    CHECK(D[0][1] == 0);
    CHECK(D[1][0] == 0);
  }
  {
    IntMat A = {{4, 2, 6}, {2, 2, 2}};
    auto s = snf_int(A);
    CHECK(s.rank == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 2);
    IntMat D = mat_mul_int(mat_mul_int(s.U, A), s.V);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 3; ++j)
        CHECK(D[i][j] == (i == j ? s.diag[i] : Int(0)));
  }
  {
    // zero matrix and empty matrix edge cases
    IntMat Z = {{0, 0}, {0, 0}};
    auto s = snf_int(Z);
    CHECK(s.rank == 0);
    CHECK(s.diag == std::vector<Int>({0, 0}));
    auto e = snf_int(IntMat{});
    CHECK(e.rank == 0);
    CHECK(e.diag.empty());
  }
}

TEST_CASE("polynomial smith normal form") {
  auto tm1 = qpoly({-1, 1});
  auto tp1 = qpoly({1, 1});
  std::vector<std::vector<Poly<Rat>>> A = {
      {tm1, Poly<Rat>()},
      {Poly<Rat>(), tp1}};
  int rank = 0;
  auto d = snf_poly(A, &rank);
  CHECK(rank == 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == qpoly({1}));
  CHECK(d[1] == mul(tm1, tp1));

  // divisibility chain d1 | d2 with a common factor
  std::vector<std::vector<Poly<Rat>>> B = {
      {mul(tm1, tm1), Poly<Rat>()},
      {Poly<Rat>(), mul(tm1, tp1)}};
  auto d2 = snf_poly(B, &rank);
  CHECK(rank == 2);
  CHECK(d2[0] == tm1);
  CHECK(d2[1] == mul(tm1, mul(tm1, tp1)));

  // rank deficiency
  std::vector<std::vector<Poly<Rat>>> C = {{tm1, tm1}, {tm1, tm1}};
  auto d3 = snf_poly(C, &rank);
  CHECK(rank == 1);
  CHECK(d3[0] == tm1);
}

TEST_CASE("budget exhaustion is reported, not mis-answered") {
  OpBudget tiny(1);
  auto f = mul(mul(qpoly({1, 3, 1, 2}), qpoly({-1, 1, 7, 1})), qpoly({5, 1}));
  auto fac = factor_poly_q(f, tiny);
  CHECK(!fac.has_value());
  OpBudget zero(0);
  CHECK(!zero.take());
}
