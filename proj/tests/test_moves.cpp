#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "slicekit/invariants.hpp"
#include "slicekit/moves.hpp"

using namespace slicekit;

namespace {

struct Profile {
  AlexPoly delta;
  int sigma;
  Int det;
  bool operator==(const Profile& o) const {
    return delta == o.delta && sigma == o.sigma && det == o.det;
  }
};

Profile knot_profile(const LinkDiagram& d) {
  return {alexander_polynomial(d), signature(d), knot_determinant(d)};
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  auto cr = a.cr;
  int off = a.max_label();
  for (const auto& x : b.cr) {
    Crossing y = x;
    for (int k = 0; k < 4; ++k) y.s[k] += off;
    cr.push_back(y);
  }
  return finalize_diagram(std::move(cr), a.free_loops + b.free_loops);
}

}  // namespace

TEST_CASE("curl insertion and removal") {
  LinkDiagram tre = parse_pd(TREFOIL);
  Profile base = knot_profile(tre);
  std::string fp = diagram_fingerprint(tre);
  CHECK(kink_sites(tre).empty());
  for (int variant = 0; variant < 4; ++variant) {
    LinkDiagram k = kink_insert(tre, 1, variant);
    CHECK(k.c() == 4);
    CHECK(k.n_components() == 1);
    CHECK(k.writhe() == tre.writhe() + (variant % 2 == 0 ? 1 : -1));
    CHECK(knot_profile(k) == base);
    auto sites = kink_sites(k);
    REQUIRE(sites.size() == 1);
    CHECK(diagram_fingerprint(kink_remove(k, sites[0])) == fp);
  }
  // curling different segments is still the same knot
  for (int lbl : {2, 3, 6}) CHECK(knot_profile(kink_insert(tre, lbl, 1)) == base);
}

TEST_CASE("curling a crossingless circle") {
  LinkDiagram ring = parse_pd("PD[]");
  REQUIRE(ring.free_loops == 1);
  for (int variant : {0, 1}) {
    LinkDiagram k = kink_free_loop(ring, variant);
    CHECK(k.c() == 1);
    CHECK(k.free_loops == 0);
    CHECK(k.writhe() == (variant == 0 ? 1 : -1));
    LinkDiagram back = reduce_diagram(k);
    CHECK(back.c() == 0);
    CHECK(back.free_loops == 1);
  }
}

TEST_CASE("finger moves create cancellable bigons") {
  LinkDiagram tre = parse_pd(TREFOIL);
  Profile base = knot_profile(tre);
  std::string fp = diagram_fingerprint(tre);
  // one poke per (mover arrives, target arrives, over) combination
  std::set<std::tuple<bool, bool, bool>> combos;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) {
      if (!poke_legal(tre, a, b)) continue;
      for (bool over : {false, true}) {
        auto key = std::make_tuple((bool)tre.head[a], (bool)tre.head[b], over);
        if (combos.count(key)) continue;
        combos.insert(key);
        LinkDiagram p = poke_insert(tre, a, b, over);
        CHECK(p.c() == 5);
        CHECK(p.n_components() == 1);
        CHECK(knot_profile(p) == base);
        CHECK(!bigon_sites(p).empty());
        CHECK(diagram_fingerprint(reduce_diagram(p)) == fp);
      }
    }
  CHECK(combos.size() == 8);
}

TEST_CASE("clasps are not reducible bigons") {
  LinkDiagram hopf = parse_pd("PD[X(1,3,2,4),X(3,1,4,2)]");
  CHECK(kink_sites(hopf).empty());
  CHECK(bigon_sites(hopf).empty());
  CHECK(reduce_diagram(hopf).c() == 2);
  CHECK_THROWS_AS(bigon_remove(hopf, 0), Error);
}

TEST_CASE("distant pieces can be entangled and pulled apart again") {
  LinkDiagram tre = parse_pd(TREFOIL);
  LinkDiagram two = disjoint_union(tre, tre);
  REQUIRE(two.n_pieces == 2);
  std::string fp = diagram_fingerprint(two);
  for (const auto& piece : split_pieces(two)) CHECK(signature(piece) == -2);

  int a = 0, b = 12;  // darts on different pieces never share a face
  CHECK(two.piece_of[a / 4] != two.piece_of[b / 4]);
  CHECK(poke_legal(two, a, b));
  LinkDiagram merged = poke_insert(two, a, b, true);
  CHECK(merged.n_pieces == 1);
  CHECK(merged.n_components() == 2);
  CHECK(signature(merged) == -4);
  for (const auto& row : linking_matrix(merged))
    for (long long v : row) CHECK(v == 0);

  LinkDiagram back = reduce_diagram(merged);
  CHECK(back.n_pieces == 2);
  CHECK(diagram_fingerprint(back) == fp);
}

TEST_CASE("a crossingless circle pokes across a strand") {
  LinkDiagram d = with_distant_unknot(parse_pd(TREFOIL));
  std::string fp = diagram_fingerprint(d);
  for (bool over : {false, true})
    for (int target : {0, 3, 7}) {
      LinkDiagram p = poke_free_loop(d, target, over);
      CHECK(p.c() == 5);
      CHECK(p.free_loops == 0);
      CHECK(p.n_components() == 2);
      CHECK(p.n_pieces == 1);
      CHECK(signature(p) == -2);
      LinkDiagram back = reduce_diagram(p);
      CHECK(back.free_loops == 1);
      CHECK(diagram_fingerprint(back) == fp);
    }
}

TEST_CASE("triangle slides realize the braid relation") {
  LinkDiagram d121 = braid_closure(3, {1, 2, 1});
  LinkDiagram d212 = braid_closure(3, {2, 1, 2});
  auto sites = triangle_sites(d121);
  REQUIRE(!sites.empty());
  bool found = false;
  for (const auto& t : sites) {
    LinkDiagram s = triangle_slide(d121, t);
    CHECK(s.c() == 3);
    CHECK(signature(s) == signature(d121));
    found = found || diagram_fingerprint(s) == diagram_fingerprint(d212);
  }
  CHECK(found);

  // and with all crossings negative
  LinkDiagram n121 = braid_closure(3, {-1, -2, -1});
  LinkDiagram n212 = braid_closure(3, {-2, -1, -2});
  bool nfound = false;
  for (const auto& t : triangle_sites(n121))
    nfound = nfound ||
             diagram_fingerprint(triangle_slide(n121, t)) == diagram_fingerprint(n212);
  CHECK(nfound);

  // a knot-valued instance, with the full invariant battery
  LinkDiagram k1 = braid_closure(3, {1, 2, 1, 1});
  LinkDiagram k2 = braid_closure(3, {2, 1, 2, 1});
  REQUIRE(k1.n_components() == 1);
  Profile base = knot_profile(k1);
  bool kfound = false;
  for (const auto& t : triangle_sites(k1)) {
    LinkDiagram s = triangle_slide(k1, t);
    CHECK(knot_profile(s) == base);
    kfound = kfound || diagram_fingerprint(s) == diagram_fingerprint(k2);
  }
  CHECK(kfound);

  // alternating diagrams have no slidable triangle
  CHECK(triangle_sites(parse_pd(TREFOIL)).empty());
  CHECK(triangle_sites(parse_pd(FIG8)).empty());
}

TEST_CASE("reduction leaves minimal diagrams alone and strips obscured ones") {
  LinkDiagram tre = parse_pd(TREFOIL);
  CHECK(reduce_diagram(tre).c() == 3);
  CHECK(diagram_fingerprint(reduce_diagram(tre)) == diagram_fingerprint(tre));
  CHECK(reduce_diagram(four_plat({2, 1, 1})).c() == 4);

  Profile base = knot_profile(tre);
  for (uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
    LinkDiagram messy = tangle_diagram(tre, seed, 10);
    CHECK(messy.c() >= 3);
    CHECK(knot_profile(messy) == base);
    LinkDiagram red = reduce_diagram(messy);
    CHECK(knot_profile(red) == base);
    CHECK(red.c() <= messy.c());
    CHECK(red.c() == 3);  // these schedules all untangle completely
  }
}

TEST_CASE("obscured unknots come back out") {
  LinkDiagram ring = parse_pd("PD[]");
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u}) {
    LinkDiagram messy = tangle_diagram(ring, seed, 10);
    CHECK(messy.n_components() == 1);
    if (messy.c() > 0) {
      CHECK(normalize_alexander(alexander_polynomial(messy)) == ipoly({1}));
      CHECK(signature(messy) == 0);
    }
    LinkDiagram red = reduce_diagram(messy);
    CHECK(red.c() == 0);
    CHECK(red.free_loops == 1);
  }
}

TEST_CASE("move primitives never corrupt a diagram") {
  Rng rng(99);
  auto knots = random_knots(rng, 6, 7, 3);
  for (const auto& d : knots) {
    std::string pd = to_pd_string(d);
    CAPTURE(pd);
    Int det = knot_determinant(d);
    int w = d.writhe();

    for (const auto& t : triangle_sites(d)) {
      CAPTURE(t.face);
      CAPTURE(t.slider_dart);
      LinkDiagram s = triangle_slide(d, t);
      CHECK(s.c() == d.c());
      CHECK(s.n_components() == 1);
      CHECK(s.writhe() == w);
      CHECK(knot_determinant(s) == det);
    }
    for (int f : bigon_sites(d)) {
      CAPTURE(f);
      LinkDiagram s = bigon_remove(d, f);
      CHECK(s.c() == d.c() - 2);
      CHECK(s.n_components() == 1);
      CHECK(s.writhe() == w);
      CHECK(knot_determinant(s) == det);
    }
    for (int j : kink_sites(d)) {
      CAPTURE(j);
      LinkDiagram s = kink_remove(d, j);
      CHECK(s.c() == d.c() - 1);
      CHECK(s.n_components() == 1);
      CHECK(s.writhe() == w - d.sign(j));
      CHECK(knot_determinant(s) == det);
    }
    for (int trial = 0; trial < 6; ++trial) {
      int a = (int)rng.below(4 * d.c());
      int b = (int)rng.below(4 * d.c());
      if (!poke_legal(d, a, b)) continue;
      CAPTURE(a);
      CAPTURE(b);
      for (bool over : {false, true}) {
        LinkDiagram s = poke_insert(d, a, b, over);
        CHECK(s.c() == d.c() + 2);
        CHECK(s.n_components() == 1);
        CHECK(s.writhe() == w);
        CHECK(knot_determinant(s) == det);
      }
    }
  }
}

TEST_CASE("shaking preserves every invariant and is reproducible") {
  Rng rng(20260815u);
  auto knots = random_knots(rng, 10, 8, 3);
  uint64_t seed = 424242;
  for (const auto& d : knots) {
    Profile base = knot_profile(d);
    LinkDiagram s1 = shake_diagram(d, seed, 18);
    LinkDiagram s2 = shake_diagram(d, seed, 18);
    CHECK(diagram_fingerprint(s1) == diagram_fingerprint(s2));
    CHECK(knot_profile(s1) == base);
    ++seed;
  }

  // a link shake keeps the linking matrix and the multivariable prune data
  LinkDiagram wh = plat_diagram(4, {2, 2, -1, 2, 2}, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
  LinkDiagram ws = shake_diagram(wh, 7, 16);
  CHECK(ws.n_components() == 2);
  CHECK(linking_matrix(ws)[0][1] == 0);
  OpBudget b1, b2;
  auto p1 = multivariable_prune_data(wh, b1);
  auto p2 = multivariable_prune_data(ws, b2);
  CHECK(p1.nullity == p2.nullity);
  CHECK(p1.fox_milnor_link == p2.fox_milnor_link);
}
