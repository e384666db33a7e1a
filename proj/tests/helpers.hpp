// Shared test fixtures: standard diagrams and seeded random knot generators.
#pragma once

#include <vector>

#include "slicekit/invariants.hpp"

inline const char* TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
inline const char* FIG8 = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";

inline slicekit::AlexPoly ipoly(std::vector<long long> cs, int lo = 0) {
  std::vector<slicekit::Rat> r(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) r[i] = slicekit::Rat(cs[i]);
  return slicekit::AlexPoly(slicekit::Poly<slicekit::Rat>(std::move(r)), lo);
}

// 4-plat of an odd-length positive continued fraction [a1, a2, ...]: odd
// positions twist the middle pair, even positions the left pair
inline slicekit::LinkDiagram four_plat(const std::vector<int>& cf) {
  std::vector<int> w;
  for (size_t i = 0; i < cf.size(); ++i)
    for (int k = 0; k < cf[i]; ++k) w.push_back(i % 2 == 0 ? 2 : -1);
  return slicekit::plat_diagram(4, w, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
}

inline slicekit::LinkDiagram torus3(int q) {  // closure of (s1 s2)^q
  std::vector<int> w;
  for (int i = 0; i < q; ++i) {
    w.push_back(1);
    w.push_back(2);
  }
  return slicekit::braid_closure(3, w);
}

inline slicekit::LinkDiagram with_distant_unknot(const slicekit::LinkDiagram& d) {
  return slicekit::finalize_diagram(d.cr, d.free_loops + 1);
}

inline std::vector<slicekit::LinkDiagram> random_knots(slicekit::Rng& rng, int count,
                                                       int max_c, int max_n) {
  using slicekit::LinkDiagram;
  std::vector<LinkDiagram> out;
  int guard = 0;
  while ((int)out.size() < count) {
    SK_CHECK(++guard < 50000, "random knot generation stalled");
    LinkDiagram d;
    if (rng.below(3) == 0) {
      int m = 1 + 2 * (int)rng.below(2);
      std::vector<int> cf(m);
      int total = 0;
      for (int& x : cf) {
        x = 1 + (int)rng.below(3);
        total += x;
      }
      if (total > max_c || total < 3) continue;
      d = four_plat(cf);
    } else {
      int n = 2 + (int)rng.below((uint64_t)(max_n - 1));
      std::vector<int> w(1 + rng.below((uint64_t)max_c));
      for (int& l : w) {
        l = 1 + (int)rng.below((uint64_t)(n - 1));
        if (rng.coin()) l = -l;
      }
      d = slicekit::braid_closure(n, w);
    }
    if (d.c() < 1 || d.n_components() != 1) continue;
    out.push_back(std::move(d));
  }
  return out;
}
