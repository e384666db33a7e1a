// Reidemeister-move surgery on PD tuples.
//
// Local frames follow the parser's slot convention: the four slots of a
// crossing sit on rays W,S,E,N (slot 0 = W), the under-strand runs W->E, and
// the face of a dart is the counterclockwise sector starting at its ray.  A
// segment split by surgery keeps its label on the piece holding the old tail
// and gets fresh labels toward the head, so every put() lands on a head slot.
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slicekit/moves.hpp"
#include "slicekit/util.hpp"

namespace slicekit {
namespace {

// Union-find over strand labels; representative = smallest member.
class LabelSets {
 public:
  int find(int x) const {
    auto it = up_.find(x);
    while (it != up_.end()) {
      x = it->second;
      it = up_.find(x);
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::map<int, int> up_;
};

// Remove the given crossings, reconnecting the strands that crossed there
// (under-pass joins slots 0-2, over-pass 1-3).  Strand cycles living
// entirely on removed crossings become crossingless components.  Only valid
// as the erasure half of a Reidemeister move or detour.
LinkDiagram erase_crossings(const LinkDiagram& d, const std::vector<int>& gone) {
  std::vector<char> dead(d.c(), 0);
  for (int j : gone) dead[j] = 1;
  LabelSets ls;
  for (int j : gone) {
    ls.unite(d.cr[j].s[0], d.cr[j].s[2]);
    ls.unite(d.cr[j].s[1], d.cr[j].s[3]);
  }
  std::vector<Crossing> cr;
  std::set<int> kept;
  for (int j = 0; j < d.c(); ++j) {
    if (dead[j]) continue;
    Crossing x = d.cr[j];
    for (int k = 0; k < 4; ++k) {
      x.s[k] = ls.find(x.s[k]);
      kept.insert(x.s[k]);
    }
    cr.push_back(x);
  }
  // fully reconnected classes are closed loops now (each class is a chain of
  // segments glued end to end, so one with no loose ends is a single cycle)
  std::set<int> classes;
  for (int j : gone)
    for (int k = 0; k < 4; ++k) classes.insert(ls.find(d.cr[j].s[k]));
  int loops = 0;
  for (int c : classes)
    if (!kept.count(c)) ++loops;
  return finalize_diagram(std::move(cr), d.free_loops + loops);
}

std::vector<int> sorted_labels(const LinkDiagram& d) {
  std::vector<int> ls;
  ls.reserve(d.occ.size());
  for (const auto& [l, o] : d.occ) ls.push_back(l);
  std::sort(ls.begin(), ls.end());
  return ls;
}

}  // namespace

// --------------------------------------------------------------------- R1

LinkDiagram kink_insert(const LinkDiagram& d, int label, int variant) {
  if (!d.occ.count(label))
    throw Error(ErrKind::NotApplicable, "kink_insert: no such segment");
  int m = d.max_label();
  int loop = m + 1, hd = m + 2;
  auto cr = d.cr;
  cr[d.head_slot(label) / 4].s[d.head_slot(label) % 4] = hd;
  switch (variant & 3) {
    case 0: cr.push_back({{label, loop, loop, hd}, false}); break;
    case 1: cr.push_back({{label, hd, loop, loop}, false}); break;
    case 2: cr.push_back({{loop, label, hd, loop}, false}); break;
    default: cr.push_back({{loop, loop, hd, label}, false}); break;
  }
  return finalize_diagram(std::move(cr), d.free_loops);
}

LinkDiagram kink_free_loop(const LinkDiagram& d, int variant) {
  if (d.free_loops <= 0)
    throw Error(ErrKind::NotApplicable, "kink_free_loop: no crossingless component");
  int m = d.max_label();
  int a = m + 1, b = m + 2;
  auto cr = d.cr;
  if ((variant & 1) == 0)
    cr.push_back({{a, b, b, a}, false});
  else
    cr.push_back({{a, a, b, b}, false});
  return finalize_diagram(std::move(cr), d.free_loops - 1);
}

std::vector<int> kink_sites(const LinkDiagram& d) {
  std::vector<int> out;
  for (int j = 0; j < d.c(); ++j)
    for (int k = 0; k < 4; ++k)
      if (d.cr[j].s[k] == d.cr[j].s[(k + 1) & 3]) {
        out.push_back(j);
        break;
      }
  return out;
}

LinkDiagram kink_remove(const LinkDiagram& d, int crossing) {
  bool curl = false;
  for (int k = 0; k < 4; ++k)
    curl = curl || d.cr[crossing].s[k] == d.cr[crossing].s[(k + 1) & 3];
  if (!curl) throw Error(ErrKind::NotApplicable, "kink_remove: crossing has no curl");
  return erase_crossings(d, {crossing});
}

// --------------------------------------------------------------------- R2

bool poke_legal(const LinkDiagram& d, int mover, int target) {
  if (mover < 0 || target < 0 || mover >= 4 * d.c() || target >= 4 * d.c())
    return false;
  if (d.label(mover) == d.label(target)) return false;
  return d.face_of[mover] == d.face_of[target] ||
         d.piece_of[mover / 4] != d.piece_of[target / 4];
}

// The finger of the mover's strand dips across the target segment and hooks
// back.  In the frame where the target dart runs east with its face (the
// poke face) to the south, the mover sits north of it; the finger's two legs
// cross the target at a west and an east point with the tip between them.
LinkDiagram poke_insert(const LinkDiagram& d, int mover, int target,
                        bool mover_over) {
  if (!poke_legal(d, mover, target))
    throw Error(ErrKind::NotApplicable, "poke_insert: darts do not share a face");
  int la = d.label(mover), lb = d.label(target);
  bool ha = d.head[mover], hb = d.head[target];
  int m = d.max_label();
  int am = m + 1, ah = m + 2, bm = m + 3, bh = m + 4;
  auto cr = d.cr;
  auto put = [&](int slot, int lbl) { cr[slot / 4].s[slot % 4] = lbl; };
  put(d.head_slot(la), ah);
  put(d.head_slot(lb), bh);
  int pn = ha ? la : ah;   // mover piece north of the west crossing
  int pn2 = ha ? ah : la;  // mover piece north of the east crossing
  int pw = hb ? bh : lb;   // target piece west of the west crossing
  int pe2 = hb ? lb : bh;  // target piece east of the east crossing
  if (mover_over) {
    if (hb) {
      cr.push_back({{bm, pn, pw, am}, false});
      cr.push_back({{pe2, pn2, bm, am}, false});
    } else {
      cr.push_back({{pw, am, bm, pn}, false});
      cr.push_back({{bm, am, pe2, pn2}, false});
    }
  } else {
    if (ha) {
      cr.push_back({{pn, pw, am, bm}, false});
      cr.push_back({{am, pe2, pn2, bm}, false});
    } else {
      cr.push_back({{am, bm, pn, pw}, false});
      cr.push_back({{pn2, bm, am, pe2}, false});
    }
  }
  return finalize_diagram(std::move(cr), d.free_loops);
}

LinkDiagram poke_free_loop(const LinkDiagram& d, int target, bool loop_over) {
  if (d.free_loops <= 0)
    throw Error(ErrKind::NotApplicable, "poke_free_loop: no crossingless component");
  if (target < 0 || target >= 4 * d.c())
    throw Error(ErrKind::NotApplicable, "poke_free_loop: bad target dart");
  int lb = d.label(target);
  bool hb = d.head[target];
  int m = d.max_label();
  int arc = m + 1, am = m + 2, bm = m + 3, bh = m + 4;
  auto cr = d.cr;
  cr[d.head_slot(lb) / 4].s[d.head_slot(lb) % 4] = bh;
  int pw = hb ? bh : lb;
  int pe2 = hb ? lb : bh;
  if (loop_over) {
    if (hb) {
      cr.push_back({{bm, arc, pw, am}, false});
      cr.push_back({{pe2, arc, bm, am}, false});
    } else {
      cr.push_back({{pw, am, bm, arc}, false});
      cr.push_back({{bm, am, pe2, arc}, false});
    }
  } else {
    cr.push_back({{arc, pw, am, bm}, false});
    cr.push_back({{am, pe2, arc, bm}, false});
  }
  return finalize_diagram(std::move(cr), d.free_loops - 1);
}

std::vector<int> bigon_sites(const LinkDiagram& d) {
  std::vector<int> out;
  for (int f = 0; f < (int)d.faces.size(); ++f) {
    if (d.faces[f].size() != 2) continue;
    int s1 = d.faces[f][0], s2 = d.faces[f][1];
    if (s1 / 4 == s2 / 4) continue;
    if (d.label(s1) == d.label(s2)) continue;
    int o1 = d.other_occ(s1), o2 = d.other_occ(s2);
    if (o1 / 4 != s2 / 4 || o2 / 4 != s1 / 4) continue;  // sides must join the corners
    if (d.is_over_slot(s1) != d.is_over_slot(o1)) continue;
    out.push_back(f);
  }
  return out;
}

LinkDiagram bigon_remove(const LinkDiagram& d, int face) {
  auto sites = bigon_sites(d);
  if (std::find(sites.begin(), sites.end(), face) == sites.end())
    throw Error(ErrKind::NotApplicable, "bigon_remove: face is not a reducible bigon");
  return erase_crossings(d, {d.faces[face][0] / 4, d.faces[face][1] / 4});
}

// --------------------------------------------------------------------- R3

namespace {

struct TriGeom {
  int ell = 0;           // slider piece between the two corner crossings
  int jA = -1, jB = -1;  // corners where the slider crosses the other sides
  int jC = -1, k = 0;    // apex crossing and the triangle's sector there
  bool slider_over = false;
  int t = 0, h = 0;  // slider pieces entering the first corner / leaving the second
  // the two far segments at the apex, in the order the slider will cross them,
  // each with its sense relative to the slider's swing around the apex
  int b1 = 0, b2 = 0;
  bool f1 = false, f2 = false;
};

bool tri_geometry(const LinkDiagram& d, const TriangleSite& site, TriGeom* g) {
  if (site.face < 0 || site.face >= (int)d.faces.size()) return false;
  const auto& darts = d.faces[site.face];
  if (darts.size() != 3) return false;
  if (std::find(darts.begin(), darts.end(), site.slider_dart) == darts.end())
    return false;
  int c0 = darts[0] / 4, c1 = darts[1] / 4, c2 = darts[2] / 4;
  if (c0 == c1 || c0 == c2 || c1 == c2) return false;
  int l0 = d.label(darts[0]), l1 = d.label(darts[1]), l2 = d.label(darts[2]);
  if (l0 == l1 || l0 == l2 || l1 == l2) return false;

  g->ell = d.label(site.slider_dart);
  auto occ = d.occ.at(g->ell);
  if (d.is_over_slot(occ[0]) != d.is_over_slot(occ[1])) return false;
  g->slider_over = d.is_over_slot(occ[0]);

  int sC = -1;
  for (int s : darts)
    if (s / 4 != occ[0] / 4 && s / 4 != occ[1] / 4) sC = s;
  if (sC < 0) return false;
  g->jC = sC / 4;
  g->k = sC % 4;
  int p = d.cr[g->jC].s[g->k];
  int q = d.cr[g->jC].s[(g->k + 1) & 3];
  int r1 = d.cr[g->jC].s[(g->k + 2) & 3];
  int r2 = d.cr[g->jC].s[(g->k + 3) & 3];
  // the rays of the triangle's sector must carry the other two sides
  bool pq_ok = (p == l0 || p == l1 || p == l2) && (q == l0 || q == l1 || q == l2) &&
               p != g->ell && q != g->ell && p != q;
  if (!pq_ok) return false;
  if (r1 == r2 || r1 == p || r1 == q || r1 == g->ell || r2 == p || r2 == q ||
      r2 == g->ell)
    return false;
  g->jA = d.other_occ(4 * g->jC + g->k) / 4;
  g->jB = d.other_occ(4 * g->jC + ((g->k + 1) & 3)) / 4;
  if (g->jA == g->jB || g->jA == g->jC || g->jB == g->jC) return false;
  int oA = occ[0] / 4, oB = occ[1] / 4;
  if (!((oA == g->jA && oB == g->jB) || (oA == g->jB && oB == g->jA)))
    return false;

  // the slider's outer pieces sit on the corners' other slider slots; its
  // middle piece leaves the first corner, so a head flag fixes the direction
  int ellA = occ[0] / 4 == g->jA ? occ[0] : occ[1];
  int ellB = occ[0] / 4 == g->jA ? occ[1] : occ[0];
  int otherA = 4 * g->jA + ((ellA + 2) & 3);
  int otherB = 4 * g->jB + ((ellB + 2) & 3);
  bool from_a = !d.head[ellA];
  g->t = d.label(from_a ? otherA : otherB);
  g->h = d.label(from_a ? otherB : otherA);
  if (from_a) {
    g->b1 = r2;
    g->f1 = d.head[4 * g->jC + ((g->k + 3) & 3)];
    g->b2 = r1;
    g->f2 = d.head[4 * g->jC + ((g->k + 2) & 3)];
  } else {
    g->b1 = r1;
    g->f1 = !d.head[4 * g->jC + ((g->k + 2) & 3)];
    g->b2 = r2;
    g->f2 = !d.head[4 * g->jC + ((g->k + 3) & 3)];
  }

  // only the sides pass straight through the erased corners; the two far
  // segments must not merge into one strand there (crossing one strand twice
  // makes the split bookkeeping ambiguous, so such sites are skipped)
  LabelSets ls;
  int u = g->slider_over ? 0 : 1;
  ls.unite(d.cr[g->jA].s[u], d.cr[g->jA].s[u + 2]);
  ls.unite(d.cr[g->jB].s[u], d.cr[g->jB].s[u + 2]);
  if (ls.find(g->b1) == ls.find(g->b2)) return false;
  return true;
}

}  // namespace

std::vector<TriangleSite> triangle_sites(const LinkDiagram& d) {
  std::vector<TriangleSite> out;
  TriGeom g;
  for (int f = 0; f < (int)d.faces.size(); ++f) {
    if (d.faces[f].size() != 3) continue;
    for (int s : d.faces[f]) {
      TriangleSite t{f, s};
      if (tri_geometry(d, t, &g)) out.push_back(t);
    }
  }
  return out;
}

LinkDiagram triangle_slide(const LinkDiagram& d, const TriangleSite& site) {
  TriGeom g;
  if (!tri_geometry(d, site, &g))
    throw Error(ErrKind::NotApplicable, "triangle_slide: not a slidable triangle");

  // drop the corners, letting the sides pass straight through them, and
  // redraw the slider across the far side of the apex with its over/under kept
  LabelSets ls;
  int u = g.slider_over ? 0 : 1;
  ls.unite(d.cr[g.jA].s[u], d.cr[g.jA].s[u + 2]);
  ls.unite(d.cr[g.jB].s[u], d.cr[g.jB].s[u + 2]);
  int tr = ls.find(g.t), hr = ls.find(g.h);
  int b1r = ls.find(g.b1), b2r = ls.find(g.b2);
  int m = d.max_label();
  int m1 = m + 1, h1 = m + 2, h2 = m + 3;

  // when a crossed segment runs into the slider's own entry piece, its head
  // piece wraps around to become the slider's first input and has no arrival
  // slot among the surviving crossings
  int n1in = tr;
  if (b1r == tr) n1in = h1;
  if (b2r == tr) n1in = h2;

  std::vector<Crossing> cr;
  int s1 = -1, s2 = -1;  // where the crossed segments arrive, new numbering
  for (int j = 0; j < d.c(); ++j) {
    if (j == g.jA || j == g.jB) continue;
    Crossing x = d.cr[j];
    for (int kk = 0; kk < 4; ++kk) {
      x.s[kk] = ls.find(x.s[kk]);
      if (d.head[4 * j + kk]) {
        if (x.s[kk] == b1r) s1 = 4 * (int)cr.size() + kk;
        if (x.s[kk] == b2r) s2 = 4 * (int)cr.size() + kk;
      }
    }
    cr.push_back(x);
  }
  if (b1r != tr) {
    SK_CHECK(s1 >= 0, "triangle_slide lost a crossed segment");
    cr[s1 / 4].s[s1 % 4] = h1;
  }
  if (b2r != tr) {
    SK_CHECK(s2 >= 0, "triangle_slide lost a crossed segment");
    cr[s2 / 4].s[s2 % 4] = h2;
  }
  auto cross = [&](int prev, int next, int tail, int head, bool toward) {
    if (g.slider_over) {
      if (toward)
        cr.push_back({{tail, prev, head, next}, false});
      else
        cr.push_back({{tail, next, head, prev}, false});
    } else {
      if (toward)
        cr.push_back({{prev, head, next, tail}, false});
      else
        cr.push_back({{prev, tail, next, head}, false});
    }
  };
  cross(n1in, m1, b1r, h1, g.f1);
  cross(m1, hr, b2r, h2, g.f2);
  return finalize_diagram(std::move(cr), d.free_loops);
}

// ------------------------------------------------------------ reduce/shake

LinkDiagram reduce_diagram(const LinkDiagram& d0, int move_budget) {
  LinkDiagram d = d0;
  int moves = 0;
  auto remove_once = [](LinkDiagram& cur) {
    auto ks = kink_sites(cur);
    if (!ks.empty()) {
      cur = kink_remove(cur, ks[0]);
      return true;
    }
    auto bs = bigon_sites(cur);
    if (!bs.empty()) {
      cur = bigon_remove(cur, bs[0]);
      return true;
    }
    return false;
  };
  while (moves < move_budget) {
    if (remove_once(d)) {
      ++moves;
      continue;
    }
    if (d.c() < 3) break;
    // stuck: breadth-first hunt through R3 slides for a removable position
    std::vector<LinkDiagram> layer{d};
    std::set<std::string> seen{diagram_fingerprint(d)};
    bool advanced = false;
    for (int depth = 0; depth < 4 && !advanced && !layer.empty(); ++depth) {
      std::vector<LinkDiagram> next;
      for (const auto& cur : layer) {
        for (const auto& site : triangle_sites(cur)) {
          if ((int)seen.size() > 48) break;
          LinkDiagram slid = triangle_slide(cur, site);
          if (!seen.insert(diagram_fingerprint(slid)).second) continue;
          if (!kink_sites(slid).empty() || !bigon_sites(slid).empty()) {
            d = std::move(slid);
            advanced = true;
            break;
          }
          next.push_back(std::move(slid));
        }
        if (advanced || (int)seen.size() > 48) break;
      }
      layer = std::move(next);
    }
    if (!advanced) break;
    ++moves;
  }
  return d;
}

namespace {

LinkDiagram random_walk(LinkDiagram d, Rng rng, int moves, bool inserts_only) {
  for (int step = 0; step < moves; ++step) {
    int roll = (int)rng.below(100);
    if (roll >= 85 && inserts_only) roll = 40;
    if (roll < 35) {
      if (d.c() == 0) {
        if (d.free_loops > 0) d = kink_free_loop(d, (int)rng.below(2));
        continue;
      }
      for (int tries = 0; tries < 6; ++tries) {
        int a = (int)rng.below(4 * d.c());
        int b = (int)rng.below(4 * d.c());
        if (poke_legal(d, a, b)) {
          d = poke_insert(d, a, b, rng.coin());
          break;
        }
      }
    } else if (roll < 60) {
      if (d.free_loops > 0 && (d.c() == 0 || rng.below(4) == 0)) {
        d = kink_free_loop(d, (int)rng.below(2));
      } else if (d.c() > 0) {
        auto ls = sorted_labels(d);
        d = kink_insert(d, ls[rng.below(ls.size())], (int)rng.below(4));
      }
    } else if (roll < 70) {
      if (d.free_loops > 0 && d.c() > 0)
        d = poke_free_loop(d, (int)rng.below(4 * d.c()), rng.coin());
    } else if (roll < 85) {
      auto ts = triangle_sites(d);
      if (!ts.empty()) d = triangle_slide(d, ts[rng.below(ts.size())]);
    } else {
      auto ks = kink_sites(d);
      auto bs = bigon_sites(d);
      if (!ks.empty() && (bs.empty() || rng.coin()))
        d = kink_remove(d, ks[rng.below(ks.size())]);
      else if (!bs.empty())
        d = bigon_remove(d, bs[rng.below(bs.size())]);
    }
  }
  return d;
}

}  // namespace

LinkDiagram shake_diagram(const LinkDiagram& d, uint64_t seed, int moves) {
  return reduce_diagram(random_walk(d, Rng(seed), moves, false));
}

LinkDiagram tangle_diagram(const LinkDiagram& d, uint64_t seed, int moves) {
  return random_walk(d, Rng(seed ^ 0x7a3161f5u), moves, true);
}

}  // namespace slicekit
