#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "slicekit/invariants.hpp"

using namespace slicekit;

namespace {

Int tdet(IntMat a) {  // fraction-free determinant, local to the tests
  int m = (int)a.size();
  if (m == 0) return 1;
  Int prev = 1;
  int sg = 1;
  for (int k = 0; k + 1 < m; ++k) {
    int p = -1;
    for (int i = k; i < m && p < 0; ++i)
      if (a[i][k] != 0) p = i;
    if (p < 0) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sg = -sg;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sg > 0 ? a[m - 1][m - 1] : Int(-a[m - 1][m - 1]);
}

int descartes(const Poly<Rat>& p) {
  int last = 0, changes = 0;
  for (const Rat& c : p.c) {
    int s = c > 0 ? 1 : c < 0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Signature by eigenvalue sign count: interpolate det(xI - A), then apply
// Descartes' rule, which is exact because a symmetric matrix is real-rooted.
// Independent of the congruence-diagonalization route in the library.
int eig_signature(const IntMat& a) {
  int m = (int)a.size();
  if (m == 0) return 0;
  Poly<Rat> full = Poly<Rat>::constant(Rat(1));
  for (int t = 0; t <= m; ++t)
    full = mul(full, Poly<Rat>(std::vector<Rat>{Rat(-t), Rat(1)}));
  Poly<Rat> p;
  for (int t = 0; t <= m; ++t) {
    IntMat b(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b[i][j] = (i == j ? Int(t) : Int(0)) - a[i][j];
    Poly<Rat> li = *divide_exact(full, Poly<Rat>(std::vector<Rat>{Rat(-t), Rat(1)}));
    p = add(p, scale(li, Rat(tdet(b)) / eval_poly(li, Rat(t))));
  }
  SK_CHECK(p.degree() == m && p.lead() == 1, "characteristic polynomial interpolation broke");
  Poly<Rat> q = p;
  for (size_t i = 1; i < q.c.size(); i += 2) q.c[i] = -q.c[i];
  return descartes(p) - descartes(q);
}

// Checkerboard data of a connected diagram: faces two-colored across every
// segment; the quadrant swept counterclockwise from the ray of slot k to the
// ray of slot k+1 is the face of dart 4j+k.
struct GoeritzParts {
  IntMat g;            // incidence form on the color-0 regions, one deleted
  std::vector<int> a;  // crossing -> 0 when the color-0 quadrant pair is slots {0,2}
  std::vector<int> eps;  // crossing sign
};

GoeritzParts goeritz_parts(const LinkDiagram& d) {
  SK_CHECK(d.connected() && d.c() >= 1, "checkerboard oracle needs a connected diagram");
  int nf = (int)d.faces.size();
  std::vector<int> color(nf, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int s : d.faces[f]) {
      int g = d.face_of[d.other_occ(s)];
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else {
        SK_CHECK(color[g] == 1 - color[f], "faces are not checkerboard colorable");
      }
    }
  }
  std::vector<int> widx(nf, -1);
  int w = 0;
  for (int f = 0; f < nf; ++f)
    if (color[f] == 0) widx[f] = w++;
  GoeritzParts out;
  std::vector<std::vector<Int>> full(w, std::vector<Int>(w, 0));
  for (int j = 0; j < d.c(); ++j) {
    int f0 = d.face_of[4 * j], f1 = d.face_of[4 * j + 1];
    int f2 = d.face_of[4 * j + 2], f3 = d.face_of[4 * j + 3];
    SK_CHECK(color[f0] == color[f2] && color[f1] == color[f3] && color[f0] != color[f1],
             "quadrant colors must alternate");
    int a = color[f0] == 0 ? 0 : 1;
    out.a.push_back(a);
    out.eps.push_back(d.sign(j));
    int eta = a == 0 ? 1 : -1;
    int u = widx[a == 0 ? f0 : f1], v = widx[a == 0 ? f2 : f3];
    if (u != v) {
      full[u][v] -= eta;
      full[v][u] -= eta;
      full[u][u] += eta;
      full[v][v] += eta;
    }
  }
  out.g.assign(w - 1, std::vector<Int>(w - 1, 0));
  for (int i = 1; i < w; ++i)
    for (int j = 1; j < w; ++j) out.g[i - 1][j - 1] = full[i][j];
  return out;
}

// Correction term: sum of eta over the crossings a candidate rule selects.
// The rule is a truth table on (quadrant pair, crossing sign).
int gl_correction(const GoeritzParts& gp, int mask) {
  int mu = 0;
  for (size_t j = 0; j < gp.a.size(); ++j) {
    int bit = gp.a[j] * 2 + (gp.eps[j] > 0 ? 1 : 0);
    if ((mask >> bit) & 1) mu += gp.a[j] == 0 ? 1 : -1;
  }
  return mu;
}

int gl_signature(const GoeritzParts& gp, int mask, int sign) {
  return sign * (eig_signature(gp.g) - gl_correction(gp, mask));
}

// Diagrams whose signature is pinned by an unambiguous external convention
// anchored at signature(positive trefoil) = -2.
std::vector<std::pair<LinkDiagram, int>> pinned_signatures() {
  std::vector<std::pair<LinkDiagram, int>> out;
  LinkDiagram tre = parse_pd(TREFOIL);
  out.emplace_back(tre, -2);
  out.emplace_back(mirror_diagram(tre), 2);
  out.emplace_back(parse_pd(FIG8), 0);
  out.emplace_back(braid_closure(2, {1, 1, 1, 1, 1}), -4);          // (2,5) torus
  out.emplace_back(braid_closure(2, {-1, -1, -1, -1, -1}), 4);
  out.emplace_back(braid_closure(2, {1, 1, 1, 1, 1, 1, 1}), -6);    // (2,7) torus
  out.emplace_back(torus3(4), -6);
  out.emplace_back(torus3(5), -8);
  out.emplace_back(connected_sum(tre, tre), -4);
  out.emplace_back(connected_sum(tre, mirror_diagram(tre)), 0);
  out.emplace_back(connected_sum(parse_pd(FIG8), tre), -2);
  out.emplace_back(braid_closure(2, {1, 1}), -1);                   // Hopf links
  out.emplace_back(braid_closure(2, {-1, -1}), 1);
  out.emplace_back(braid_closure(2, {1, 1, 1, 1}), -3);             // (2,4) torus
  out.emplace_back(parse_pd("PD[X(1,2,2,1)]"), 0);                  // kinked unknots
  out.emplace_back(parse_pd("PD[X(1,1,2,2)]"), 0);
  return out;
}

struct GlRule {
  int mask;
  int sign;
};

// Fix the orientation conventions of the checkerboard formula once, by
// keeping every candidate rule that reproduces all pinned signatures.
const std::vector<GlRule>& gl_rules() {
  static const std::vector<GlRule> rules = [] {
    auto pinned = pinned_signatures();
    std::vector<GlRule> out;
    for (int sign : {1, -1})
      for (int mask = 0; mask < 16; ++mask) {
        bool ok = true;
        for (const auto& [d, sig] : pinned)
          if (gl_signature(goeritz_parts(d), mask, sign) != sig) {
            ok = false;
            break;
          }
        if (ok) out.push_back({mask, sign});
      }
    return out;
  }();
  return rules;
}

}  // namespace

TEST_CASE("seifert matrices of the standard examples") {
  SeifertMatrix tre = seifert_matrix(parse_pd(TREFOIL));
  CHECK(tre.size() == 2);
  IntMat skew(2, std::vector<Int>(2)), sym(2, std::vector<Int>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      skew[i][j] = tre.v[i][j] - tre.v[j][i];
      sym[i][j] = tre.v[i][j] + tre.v[j][i];
    }
  CHECK(tdet(skew) == 1);
  CHECK(abs_int(tdet(sym)) == 3);

  SeifertMatrix f8 = seifert_matrix(parse_pd(FIG8));
  CHECK(f8.size() == 2);
  IntMat sym8(2, std::vector<Int>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sym8[i][j] = f8.v[i][j] + f8.v[j][i];
  CHECK(abs_int(tdet(sym8)) == 5);

  CHECK(seifert_matrix(parse_pd("PD[]")).size() == 0);
  CHECK(seifert_matrix(parse_pd("PD[X(1,2,2,1)]")).size() == 0);  // kink spans a disk

  // a connected 2-component diagram is fine; size = 1 - Euler characteristic
  CHECK(seifert_matrix(braid_closure(2, {1, 1})).size() == 1);

  CHECK_THROWS_AS(seifert_matrix(parse_pd("PD[U,U]")), Error);
  try {
    seifert_matrix(parse_pd("PD[U,U]"));
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::NotApplicable);
  }
}

TEST_CASE("braid form reads back the input closure") {
  BraidForm tre = braid_form(parse_pd(TREFOIL));
  CHECK(tre.n_strands == 2);
  CHECK(tre.word == std::vector<int>{1, 1, 1});

  BraidForm f8 = braid_form(parse_pd(FIG8));
  CHECK(f8.n_strands == 3);
  CHECK(f8.word.size() == 4);
  CHECK(diagram_fingerprint(braid_closure(f8.n_strands, f8.word)) ==
        diagram_fingerprint(f8.diagram));

  BraidForm u = braid_form(parse_pd("PD[]"));
  CHECK(u.n_strands == 1);
  CHECK(u.word.empty());

  CHECK_THROWS_AS(braid_form(parse_pd("PD[U,U]")), Error);

  // plats are not braid-shaped: the moves must preserve the link type
  for (const auto& cf : std::vector<std::vector<int>>{{2, 2, 1}, {4, 1, 1}, {3, 1, 2}}) {
    LinkDiagram d = four_plat(cf);
    BraidForm bf = braid_form(d);
    CHECK((int)bf.word.size() == bf.diagram.c());
    CHECK(diagram_fingerprint(braid_closure(bf.n_strands, bf.word)) ==
          diagram_fingerprint(bf.diagram));
    CHECK(alexander_polynomial(bf.diagram) == alexander_polynomial(d));
    CHECK(signature(bf.diagram) == signature(d));
  }
}

TEST_CASE("alexander polynomial examples") {
  CHECK(alexander_polynomial(parse_pd(TREFOIL)) == ipoly({1, -1, 1}));
  CHECK(alexander_polynomial(parse_pd(FIG8)) == ipoly({1, -3, 1}));
  CHECK(alexander_polynomial(parse_pd("PD[]")) == ipoly({1}));
  CHECK(alexander_polynomial(parse_pd("PD[X(1,2,2,1)]")) == ipoly({1}));
  CHECK(alexander_polynomial(four_plat({2, 2, 1})) == ipoly({2, -3, 2}));      // 5_2
  CHECK(alexander_polynomial(four_plat({4, 1, 1})) == ipoly({2, -5, 2}));      // 6_1
  CHECK(alexander_polynomial(four_plat({3, 1, 2})) == ipoly({1, -3, 3, -3, 1}));  // 6_2
  CHECK(alexander_polynomial(four_plat({2, 1, 1, 1, 1})) ==
        ipoly({1, -3, 5, -3, 1}));                                             // 6_3
  CHECK(alexander_polynomial(four_plat({5, 1, 1})) == ipoly({3, -5, 3}));      // 7_2
  CHECK(alexander_polynomial(four_plat({3, 1, 3})) == ipoly({4, -7, 4}));      // 7_4
  CHECK(alexander_polynomial(torus3(4)) == ipoly({1, -1, 0, 1, 0, -1, 1}));
  CHECK(alexander_polynomial(torus3(5)) == ipoly({1, -1, 0, 1, -1, 1, 0, -1, 1}));

  CHECK_THROWS_AS(alexander_polynomial(braid_closure(2, {1, 1})), Error);
}

TEST_CASE("both alexander routes agree on the named diagrams") {
  std::vector<LinkDiagram> ds{parse_pd(TREFOIL), parse_pd(FIG8),
                              parse_pd("PD[X(1,2,2,1)]"), four_plat({2, 2, 1}),
                              four_plat({4, 1, 1}), four_plat({3, 1, 2}),
                              four_plat({3, 1, 3}), four_plat({2, 1, 1, 1, 1}),
                              torus3(4), torus3(5)};
  for (const auto& d : ds)
    CHECK(alexander_polynomial(d) == alexander_via_wirtinger(d));
}

TEST_CASE("normalized form clears units, content, and sign") {
  CHECK(normalize_alexander(ipoly({-2, 4}, -3)) == ipoly({-1, 2}));
  AlexPoly half(Poly<Rat>(std::vector<Rat>{Rat(1) / Rat(2), Rat(-1) / Rat(2)}), 5);
  CHECK(normalize_alexander(half) == ipoly({-1, 1}));
  CHECK(normalize_alexander(AlexPoly()).is_zero());
}

TEST_CASE("signature examples") {
  CHECK(signature(parse_pd(TREFOIL)) == -2);
  CHECK(signature(mirror_diagram(parse_pd(TREFOIL))) == 2);
  CHECK(signature(parse_pd(FIG8)) == 0);
  CHECK(signature(parse_pd("PD[]")) == 0);
  CHECK(signature(torus3(4)) == -6);
  CHECK(signature(torus3(5)) == -8);
  CHECK(signature(braid_closure(2, {1, 1})) == -1);  // positive Hopf link
  CHECK(signature(four_plat({4, 1, 1})) == 0);       // 6_1
  CHECK(signature(four_plat({2, 1, 1, 1, 1})) == 0); // 6_3
  CHECK(std::abs(signature(four_plat({2, 2, 1}))) == 2);   // 5_2
  CHECK(std::abs(signature(four_plat({3, 1, 2}))) == 2);   // 6_2
  CHECK(std::abs(signature(four_plat({3, 1, 3}))) == 2);   // 7_4

  Rng rng(20260815);
  for (const auto& d : random_knots(rng, 20, 8, 3)) {
    LinkDiagram sum = connected_sum(d, mirror_diagram(d));
    CHECK(signature(sum) == 0);
  }
}

TEST_CASE("signature agrees with eigenvalue sign counts and the checkerboard form") {
  // the calibration itself: some truth-table rule must reproduce every pinned
  // value, and each survivor is then cross-checked everywhere else
  REQUIRE(!gl_rules().empty());

  auto crosscheck = [&](const LinkDiagram& d) {
    IntMat v = seifert_matrix(d).v;
    int m = (int)v.size();
    IntMat sym(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sym[i][j] = v[i][j] + v[j][i];
    int sig = signature(d);
    if (m <= 14) CHECK(eig_signature(sym) == sig);
    GoeritzParts gp = goeritz_parts(d);
    for (const GlRule& r : gl_rules()) CHECK(gl_signature(gp, r.mask, r.sign) == sig);
    if (d.n_components() == 1) CHECK(abs_int(tdet(gp.g)) == knot_determinant(d));
  };

  for (const auto& [d, sig] : pinned_signatures()) {
    CHECK(signature(d) == sig);
    crosscheck(d);
  }
  for (const auto& cf :
       std::vector<std::vector<int>>{{2, 2, 1}, {4, 1, 1}, {3, 1, 2}, {3, 1, 3}, {5, 1, 1}})
    crosscheck(four_plat(cf));

  Rng rng(7151623);
  for (const auto& d : random_knots(rng, 18, 9, 4)) crosscheck(d);
}

TEST_CASE("determinant examples") {
  CHECK(knot_determinant(parse_pd(FIG8)) == 5);
  CHECK(knot_determinant(four_plat({4, 1, 1})) == 9);  // 6_1, from 2t^2-5t+2
  CHECK(knot_determinant(parse_pd("PD[]")) == 1);
  CHECK(knot_determinant(parse_pd(TREFOIL)) == 3);
  CHECK(knot_determinant(four_plat({2, 2, 1})) == 7);
  CHECK(knot_determinant(four_plat({3, 1, 2})) == 11);
  CHECK(knot_determinant(four_plat({2, 1, 1, 1, 1})) == 13);
  CHECK(knot_determinant(four_plat({3, 1, 3})) == 15);
  CHECK(knot_determinant(torus3(4)) == 3);
  CHECK(knot_determinant(torus3(5)) == 1);
}

TEST_CASE("fox-milnor test") {
  CHECK(fox_milnor_test(ipoly({2, -5, 2})));       // f = 2t - 1
  CHECK(!fox_milnor_test(ipoly({1, -3, 1})));      // determinant 5 is not square
  CHECK(fox_milnor_test(ipoly({1})));
  // square determinant 9, but irreducible and symmetric, so not a norm
  CHECK(!fox_milnor_test(ipoly({1, 2, -7, 2, 1})));

  CHECK_THROWS_AS(fox_milnor_test(AlexPoly()), Error);
  CHECK_THROWS_AS(fox_milnor_test(ipoly({1, 1})), Error);      // value 2 at t = 1
  CHECK_THROWS_AS(fox_milnor_test(ipoly({3, -1, -1})), Error); // asymmetric
  try {
    fox_milnor_test(ipoly({1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::NotApplicable);
  }

  Rng rng(0xfeedbeef);
  for (int rep = 0; rep < 200; ++rep) {
    int deg = 1 + (int)rng.below(3);
    std::vector<Rat> cs(deg + 1);
    for (int i = 1; i <= deg; ++i) cs[i] = Rat(rng.range(-3, 3));
    if (cs[deg] == 0) cs[deg] = Rat(1 + (int)rng.below(3));
    Rat sum(0);
    for (int i = 1; i <= deg; ++i) sum += cs[i];
    cs[0] = Rat(rng.coin() ? 1 : -1) - sum;  // force f(1) = +-1
    AlexPoly f(Poly<Rat>(std::move(cs)), (int)rng.below(4) - 2);
    AlexPoly prod = normalize_alexander(mul(f, bar(f)));
    CHECK(fox_milnor_test(prod));
  }
}

TEST_CASE("plausibly slice filter") {
  CHECK(plausibly_slice(four_plat({4, 1, 1})));       // 6_1
  CHECK(!plausibly_slice(parse_pd(TREFOIL)));         // sigma = -2
  CHECK(!plausibly_slice(parse_pd(FIG8)));            // determinant 5
  CHECK(plausibly_slice(parse_pd("PD[]")));
  CHECK(!plausibly_slice(four_plat({2, 1, 1, 1, 1})));  // 6_3: sigma 0, det 13
  // the square knot passes: sigma additivity and delta = product
  CHECK(plausibly_slice(connected_sum(parse_pd(TREFOIL), mirror_diagram(parse_pd(TREFOIL)))));
  CHECK_THROWS_AS(plausibly_slice(parse_pd("PD[U,U]")), Error);
}

TEST_CASE("mirror behavior of the knot invariants") {
  Rng rng(424242);
  for (const auto& d : random_knots(rng, 12, 9, 4)) {
    LinkDiagram m = mirror_diagram(d);
    CHECK(signature(m) == -signature(d));
    AlexPoly dm = alexander_polynomial(m), dd = alexander_polynomial(d);
    CHECK(dm == dd);  // normalized, and delta is symmetric
    CHECK(is_associate(dm, bar(dd)));
    CHECK(knot_determinant(m) == knot_determinant(d));
    CHECK(plausibly_slice(m) == plausibly_slice(d));
  }
}

TEST_CASE("random knot cross-checks between independent routes") {
  Rng rng(90125);
  for (const auto& d : random_knots(rng, 16, 10, 4)) {
    AlexPoly delta = alexander_polynomial(d);
    CHECK(delta == alexander_via_wirtinger(d));
    CHECK(branched_order_oracle(delta, 2) == knot_determinant(d));
    Rat at1 = eval_poly(delta.num, Rat(1));
    CHECK((at1 == 1 || at1 == -1));

    BraidForm bf = braid_form(d);
    CHECK(diagram_fingerprint(braid_closure(bf.n_strands, bf.word)) ==
          diagram_fingerprint(bf.diagram));
    CHECK(alexander_polynomial(bf.diagram) == delta);
  }
}

TEST_CASE("multivariable prune data") {
  OpBudget big;

  auto unlink = multivariable_prune_data(parse_pd("PD[U,U]"), big);
  CHECK(unlink.nullity == 1);
  CHECK(unlink.first_poly == ml_const(2, 1));
  CHECK(unlink.fox_milnor_link);
  CHECK(!unlink.indeterminate);

  auto hopf = multivariable_prune_data(parse_pd("PD[X(1,3,2,4),X(3,1,4,2)]"), big);
  CHECK(hopf.nullity == 0);
  CHECK(!hopf.fox_milnor_link);

  LinkDiagram wh = plat_diagram(4, {2, 2, -1, 2, 2}, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
  auto white = multivariable_prune_data(wh, big);
  CHECK(white.nullity == 0);
  CHECK(!white.fox_milnor_link);

  // split unions: nullity mu - 1 and the knot polynomial decide
  auto split_tre = multivariable_prune_data(with_distant_unknot(parse_pd(TREFOIL)), big);
  CHECK(split_tre.nullity == 1);
  CHECK(!split_tre.indeterminate);
  MLaurent tre_poly = add(sub(ml_monomial(2, 0, 2), ml_monomial(2, 0, 1)), ml_const(2, 1));
  CHECK(is_associate(split_tre.first_poly, tre_poly));
  CHECK(!split_tre.fox_milnor_link);  // 3 is not a perfect square

  auto split61 = multivariable_prune_data(with_distant_unknot(four_plat({4, 1, 1})), big);
  CHECK(split61.nullity == 1);
  CHECK(split61.fox_milnor_link);  // 9 is a perfect square

  // exhausted budgets surface as an indeterminate pass, never a prune
  OpBudget tiny(25);
  auto starved = multivariable_prune_data(wh, tiny);
  CHECK(starved.indeterminate);
  CHECK(starved.fox_milnor_link);
  CHECK(starved.nullity == -1);

  CHECK_THROWS_AS(multivariable_prune_data(parse_pd(TREFOIL), big), Error);
}

TEST_CASE("branched cover order oracle") {
  AlexPoly tre = alexander_polynomial(parse_pd(TREFOIL));
  AlexPoly f8 = alexander_polynomial(parse_pd(FIG8));
  CHECK(branched_order_oracle(tre, 2) == 3);
  CHECK(branched_order_oracle(tre, 3) == 4);
  CHECK(branched_order_oracle(f8, 3) == 16);
  CHECK(branched_order_oracle(ipoly({1}), 5) == 1);
  CHECK(branched_order_oracle(ipoly({1, 1}), 2) == 0);  // root of unity: infinite group
  CHECK_THROWS_AS(branched_order_oracle(tre, 1), Error);
}
