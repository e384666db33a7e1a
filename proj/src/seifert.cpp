// Closed-braid form of a connected diagram via coherence-improving R2 moves,
// and the Seifert matrix read off the resulting stacked-disk surface.
//
// The oriented smoothing splits every crossing into two non-crossing
// junctions; its orbits are the strand circles.  A face is incoherent when
// two of its boundary darts lie on different circles but point the same way
// around the face; a tongue move (R2, run strand over) fixes one such pair
// without changing the circle count.  When no face is incoherent the circles
// are nested annuli read off as braid strands (innermost = strand 1).
#include <algorithm>
#include <map>
#include <vector>

#include "slicekit/invariants.hpp"

namespace slicekit {
namespace {

// departure slot of the oriented smoothing for a strand arriving at slot k
int smooth_exit(const Crossing& x, int k) {
  if (x.over_bd) return k == 0 ? 3 : 2;  // arrivals 0,1
  return k == 0 ? 1 : 2;                 // arrivals 0,3
}

int circ_next(const LinkDiagram& d, int lbl) {
  int h = d.head_slot(lbl);
  return d.label(4 * (h / 4) + smooth_exit(d.cr[h / 4], h % 4));
}

struct Circles {
  std::vector<std::vector<int>> cyc;  // labels in strand order
  std::map<int, int> of;              // label -> circle index
};

Circles seifert_circles(const LinkDiagram& d) {
  Circles c;
  std::vector<int> labels;
  labels.reserve(d.occ.size());
  for (const auto& [l, o] : d.occ) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  for (int l0 : labels) {
    if (c.of.count(l0)) continue;
    std::vector<int> cyc;
    for (int l = l0; !c.of.count(l); l = circ_next(d, l)) {
      c.of[l] = (int)c.cyc.size();
      cyc.push_back(l);
    }
    c.cyc.push_back(std::move(cyc));
  }
  return c;
}

// Apply one tongue move if some face is incoherent.  The two new crossings
// are an R2 pair (opposite signs), so the link type is untouched, and the
// rebuilt diagram re-runs all planarity and orientation validation.
bool tongue_step(LinkDiagram& d, const Circles& c) {
  for (const auto& face : d.faces) {
    for (size_t i = 0; i < face.size(); ++i)
      for (size_t j = i + 1; j < face.size(); ++j) {
        int s1 = face[i], s2 = face[j];
        if (d.head[s1] != d.head[s2]) continue;
        int l1 = d.label(s1), l2 = d.label(s2);
        if (c.of.at(l1) == c.of.at(l2)) continue;
        int m = d.max_label();
        int nb = m + 1, nc = m + 2, t2 = m + 3, t3 = m + 4;
        auto cr = d.cr;
        auto put = [&](int slot, int lbl) { cr[slot / 4].s[slot % 4] = lbl; };
        put(d.head_slot(l1), t3);
        put(d.head_slot(l2), nc);
        // l1 detours across l2 and hooks back downstream, splitting l1 into
        // l1,nb,t3 and l2 into l2,t2,nc (l2 reaches the hook crossing first)
        if (d.head[s1]) {
          cr.push_back({{t2, l1, nc, nb}, false});
          cr.push_back({{l2, t3, t2, nb}, false});
        } else {
          cr.push_back({{t2, nb, nc, l1}, false});
          cr.push_back({{l2, nb, t2, t3}, false});
        }
        d = finalize_diagram(std::move(cr), d.free_loops);
        return true;
      }
  }
  return false;
}

LinkDiagram coherent_form(LinkDiagram d) {
  size_t n0 = seifert_circles(d).cyc.size();
  size_t cap = 4 * n0 * n0 + 16;
  for (size_t iter = 0;; ++iter) {
    SK_CHECK(iter <= cap, "coherence moves did not terminate");
    Circles c = seifert_circles(d);
    SK_CHECK(c.cyc.size() == n0, "tongue move changed the circle count");
    if (!tongue_step(d, c)) return d;
  }
}

struct BraidStructure {
  LinkDiagram d;   // coherent form
  Circles circ;
  int n = 0;                          // strand count
  std::vector<int> strand_of;         // circle -> strand 1..n (1 = innermost)
  std::vector<int> circle_at;         // strand -> circle
  std::vector<std::vector<int>> seq;  // strand k -> crossings from its cut
  std::vector<int> column;            // crossing -> k (joins strands k, k+1)
};

BraidStructure braid_structure(const LinkDiagram& din) {
  BraidStructure bs;
  bs.d = coherent_form(din);
  const LinkDiagram& d = bs.d;
  bs.circ = seifert_circles(d);
  int n = bs.n = (int)bs.circ.cyc.size();
  SK_CHECK(n <= 64, "too many strand circles");

  // the two axis faces: all darts on a single circle
  std::vector<int> axis;
  for (int f = 0; f < (int)d.faces.size(); ++f) {
    int first = bs.circ.of.at(d.label(d.faces[f][0]));
    bool one = true;
    for (int s : d.faces[f]) one = one && bs.circ.of.at(d.label(s)) == first;
    if (one) axis.push_back(f);
  }
  SK_CHECK(axis.size() == 2, "coherent diagram must have exactly two axis faces");

  // The circles run with the boundary walk around one axis face (all darts
  // arrivals) and against it around the other.  Strand numbering hangs off
  // this: the all-arrivals face is the innermost one, next to strand 1,
  // matching how the closure builder lays out its strands.
  for (int a : axis)
    for (int s : d.faces[a])
      SK_CHECK(d.head[s] == d.head[d.faces[a][0]], "axis face darts must align");
  if (!d.head[d.faces[axis[1]][0]]) std::swap(axis[0], axis[1]);
  SK_CHECK(d.head[d.faces[axis[1]][0]] && !d.head[d.faces[axis[0]][0]],
           "axis faces must run in opposite senses");

  // which circles contain each face, as parity from the first axis face
  int nf = (int)d.faces.size();
  std::vector<uint64_t> inside(nf, 0);
  std::vector<char> seen(nf, 0);
  std::vector<int> queue{axis[0]};
  seen[axis[0]] = 1;
  for (size_t q = 0; q < queue.size(); ++q) {
    int f = queue[q];
    for (int s : d.faces[f]) {
      int g = d.face_of[d.other_occ(s)];
      uint64_t msk = inside[f] ^ (1ull << bs.circ.of.at(d.label(s)));
      if (!seen[g]) {
        seen[g] = 1;
        inside[g] = msk;
        queue.push_back(g);
      } else {
        SK_CHECK(inside[g] == msk, "inconsistent face nesting");
      }
    }
  }
  for (int f = 0; f < nf; ++f) SK_CHECK(seen[f], "face graph disconnected");
  auto level = [&](int f) { return __builtin_popcountll(inside[f]); };
  SK_CHECK(level(axis[1]) == n, "axis faces must be separated by every circle");

  // depth: how many circles a circle lies inside of, plus itself
  std::vector<int> depth(n, -1);
  for (const auto& [l, ci] : bs.circ.of) {
    int f0 = d.face_of[d.occ.at(l)[0]], f1 = d.face_of[d.occ.at(l)[1]];
    int dep = std::max(level(f0), level(f1));
    if (depth[ci] == -1) depth[ci] = dep;
    SK_CHECK(depth[ci] == dep, "circle depth must be constant");
  }
  {
    std::vector<int> sorted = depth;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) SK_CHECK(sorted[i] == i + 1, "circles must nest linearly");
  }
  bs.strand_of.resize(n);
  bs.circle_at.assign(n + 1, -1);
  for (int ci = 0; ci < n; ++ci) {
    bs.strand_of[ci] = n + 1 - depth[ci];
    bs.circle_at[n + 1 - depth[ci]] = ci;
  }

  bs.column.assign(d.c(), 0);
  for (int j = 0; j < d.c(); ++j) {
    int ca = bs.circ.of.at(d.cr[j].s[0]);
    int cb = bs.circ.of.at(d.cr[j].s[d.cr[j].over_bd ? 1 : 3]);
    SK_CHECK(ca != cb, "crossing must join two circles");
    int sa = bs.strand_of[ca], sb = bs.strand_of[cb];
    SK_CHECK(sa - sb == 1 || sb - sa == 1, "crossing must join adjacent strands");
    bs.column[j] = std::min(sa, sb);
  }

  // Aligned cuts: walk from the innermost disk out, crossing one circle per
  // step; consecutive cut segments share a face, so reading every circle
  // from its cut keeps each column's bands in one consistent order.
  std::vector<int> cut(n, -1);
  int cur = axis[1];
  for (int lv = n; lv >= 1; --lv) {
    int pick = -1, nextf = -1;
    for (int s : d.faces[cur]) {
      int l = d.label(s);
      int g = d.face_of[d.other_occ(s)];
      if (level(g) == lv - 1 && (pick == -1 || l < pick)) {
        pick = l;
        nextf = g;
      }
    }
    SK_CHECK(pick != -1, "stuck while cutting toward the outer face");
    cut[bs.circ.of.at(pick)] = pick;
    cur = nextf;
  }
  SK_CHECK(cur == axis[0], "cut path must end at the outer face");

  bs.seq.resize(n);
  for (int k = 1; k <= n; ++k) {
    int l0 = cut[bs.circle_at[k]];
    SK_CHECK(l0 != -1, "missing cut segment");
    int l = l0;
    do {
      bs.seq[k - 1].push_back(d.head_slot(l) / 4);
      l = circ_next(d, l);
    } while (l != l0);
  }
  for (int k = 1; k < n; ++k) {
    std::vector<int> a, b;
    for (int j : bs.seq[k - 1])
      if (bs.column[j] == k) a.push_back(j);
    for (int j : bs.seq[k])
      if (bs.column[j] == k) b.push_back(j);
    SK_CHECK(a == b, "column bands must agree in order on both circles");
  }
  return bs;
}

std::vector<int> read_word(const BraidStructure& bs) {
  int n = bs.n;
  std::vector<size_t> ptr(n, 0);
  std::vector<int> word;
  word.reserve(bs.d.c());
  for (int emitted = 0; emitted < bs.d.c();) {
    bool moved = false;
    for (int k = 1; k < n && !moved; ++k) {
      const auto& sa = bs.seq[k - 1];
      const auto& sb = bs.seq[k];
      if (ptr[k - 1] < sa.size() && ptr[k] < sb.size() &&
          sa[ptr[k - 1]] == sb[ptr[k]]) {
        int j = sa[ptr[k - 1]];
        word.push_back(bs.d.sign(j) * k);
        ++ptr[k - 1];
        ++ptr[k];
        ++emitted;
        moved = true;
      }
    }
    SK_CHECK(moved, "braid reading stalled");
  }
  return word;
}

Int int_det(IntMat a) {
  int m = (int)a.size();
  if (m == 0) return 1;
  Int prev = 1;
  int sgn = 1;
  for (int k = 0; k + 1 < m; ++k) {
    int p = -1;
    for (int i = k; i < m && p < 0; ++i)
      if (a[i][k] != 0) p = i;
    if (p < 0) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sgn > 0 ? a[m - 1][m - 1] : Int(-a[m - 1][m - 1]);
}

}  // namespace

BraidForm braid_form(const LinkDiagram& d) {
  if (!d.connected())
    throw Error(ErrKind::NotApplicable, "braid form needs a connected diagram");
  if (d.c() == 0) return {d, 1, {}};
  BraidStructure bs = braid_structure(d);
  return {bs.d, bs.n, read_word(bs)};
}

SeifertMatrix seifert_matrix(const LinkDiagram& din) {
  if (!din.connected())
    throw Error(ErrKind::NotApplicable, "Seifert matrix needs a connected diagram");
  if (din.c() == 0) return {};
  BraidStructure bs = braid_structure(din);
  const LinkDiagram& d = bs.d;
  int n = bs.n;

  // Surface: one disk per strand circle, stacked with strand 1 on top, and
  // one twisted band per crossing between adjacent disks.  Basis of H_1:
  // loops through consecutive bands of one column, columns ascending.
  std::vector<std::vector<int>> colbands(n);
  for (int k = 1; k < n; ++k) {
    for (int j : bs.seq[k - 1])
      if (bs.column[j] == k) colbands[k].push_back(j);
    SK_CHECK(!colbands[k].empty(), "adjacent disks must share a band");
  }
  struct Loop {
    int b1, b2, col;
  };
  std::vector<Loop> loops;
  for (int k = 1; k < n; ++k)
    for (size_t i = 0; i + 1 < colbands[k].size(); ++i)
      loops.push_back({colbands[k][i], colbands[k][i + 1], k});
  int g = (int)loops.size();
  SK_CHECK(g == d.c() - n + 1, "surface rank must be 1 - Euler characteristic");

  IntMat v(g, std::vector<Int>(g, 0));
  for (int x = 0; x < g; ++x) {
    // band twists along the loop itself
    v[x][x] = Int(-(d.sign(loops[x].b1) + d.sign(loops[x].b2)) / 2);
    // a band shared with the next loop of the same column
    if (x + 1 < g && loops[x + 1].col == loops[x].col) {
      int eps = d.sign(loops[x].b2);
      v[x + 1][x] += Int((1 + eps) / 2);
      v[x][x + 1] += Int((eps - 1) / 2);
    }
  }
  // chords on the shared disk: a column-k loop enters disk k+1 from above, a
  // column-(k+1) loop from below; they link once when interleaved
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      if (loops[y].col != loops[x].col + 1) continue;
      const auto& s = bs.seq[loops[x].col];  // circle k+1, the shared disk
      auto pos = [&](int j) {
        return (int)(std::find(s.begin(), s.end(), j) - s.begin());
      };
      int p1 = pos(loops[x].b1), p2 = pos(loops[x].b2);
      int q1 = pos(loops[y].b1), q2 = pos(loops[y].b2);
      SK_CHECK(p1 < p2 && q1 < q2, "cut alignment broken on shared disk");
      if (p1 < q1 && q1 < p2 && p2 < q2) v[y][x] += 1;
      if (q1 < p1 && p1 < q2 && q2 < p2) v[y][x] -= 1;
    }

  if (din.n_components() == 1) {
    Int u = int_det([&] {
      IntMat w(g, std::vector<Int>(g, 0));
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) w[i][j] = v[i][j] - v[j][i];
      return w;
    }());
    SK_CHECK(u == 1 || u == -1, "knot intersection form must be unimodular");
  }
  return {std::move(v)};
}

}  // namespace slicekit
