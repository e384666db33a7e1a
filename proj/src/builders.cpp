// Braid-closure and plat builders on a shared grid model: vertical strand
// positions, crossings appended row by row, segment labels merged where the
// grid wires join (closure arcs or caps).
#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "slicekit/diagram.hpp"

namespace slicekit {

namespace {

struct LabelUF {
  std::vector<int> p;
  explicit LabelUF(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void merge(int a, int b) { p[std::max(find(a), find(b))] = std::min(find(a), find(b)); }
};

}  // namespace

LinkDiagram braid_closure(int n_strands, const std::vector<int>& word) {
  SK_CHECK(n_strands >= 1, "braid needs at least one strand");
  std::vector<int> cur(n_strands + 1);
  std::iota(cur.begin(), cur.end(), 0);
  int next = n_strands;
  std::vector<Crossing> cr;
  for (int w : word) {
    int k = std::abs(w);
    SK_CHECK(w != 0 && k < n_strands, "braid letter out of range");
    int a = ++next, b = ++next;  // outgoing segments, left then right
    // all strands run downward, so the under-strand always enters from above
    if (w > 0)
      cr.push_back({{cur[k + 1], cur[k], a, b}, false});
    else
      cr.push_back({{cur[k], a, b, cur[k + 1]}, false});
    cur[k] = a;
    cur[k + 1] = b;
  }
  LabelUF uf(next);
  for (int i = 1; i <= n_strands; ++i) uf.merge(cur[i], i);
  std::vector<char> used(next + 1, 0);
  for (auto& x : cr)
    for (int& l : x.s) used[l = uf.find(l)] = 1;
  int loops = 0;
  for (int l = 1; l <= next; ++l)
    if (uf.find(l) == l && !used[l]) ++loops;
  return finalize_diagram(std::move(cr), loops);
}

LinkDiagram plat_diagram(int n_strands, const std::vector<int>& word,
                         const std::vector<std::pair<int, int>>& top_caps,
                         const std::vector<std::pair<int, int>>& bottom_caps) {
  SK_CHECK(n_strands >= 2 && n_strands % 2 == 0, "plat needs an even strand count");
  auto check_matching = [&](const std::vector<std::pair<int, int>>& caps) {
    std::vector<char> hit(n_strands + 1, 0);
    SK_CHECK((int)caps.size() * 2 == n_strands, "caps must pair all strands");
    for (auto& [i, j] : caps) {
      SK_CHECK(i >= 1 && i <= n_strands && j >= 1 && j <= n_strands && i != j,
               "cap out of range");
      SK_CHECK(!hit[i] && !hit[j], "strand capped twice");
      hit[i] = hit[j] = 1;
    }
  };
  check_matching(top_caps);
  check_matching(bottom_caps);

  enum { NW = 0, NE = 1, SW = 2, SE = 3 };
  struct GridXing {
    int lab[4];
    bool over_nw;
  };
  std::vector<int> cur(n_strands + 1);
  std::iota(cur.begin(), cur.end(), 0);
  int next = n_strands;
  std::vector<GridXing> gx;
  for (int w : word) {
    int k = std::abs(w);
    SK_CHECK(w != 0 && k < n_strands, "plat letter out of range");
    int a = ++next, b = ++next;
    gx.push_back({{cur[k], cur[k + 1], a, b}, w > 0});
    cur[k] = a;
    cur[k + 1] = b;
  }
  LabelUF uf(next);
  for (auto& [i, j] : top_caps) uf.merge(i, j);
  for (auto& [i, j] : bottom_caps) uf.merge(cur[i], cur[j]);

  // wire = merged label class; each wire touches exactly two crossing ports
  // (or none: a crossingless circle)
  std::vector<std::vector<int>> ports(next + 1);  // root -> port refs 4*x+p
  for (int x = 0; x < (int)gx.size(); ++x)
    for (int p = 0; p < 4; ++p) ports[uf.find(gx[x].lab[p])].push_back(4 * x + p);
  int loops = 0;
  for (int l = 1; l <= next; ++l)
    if (uf.find(l) == l) {
      SK_CHECK(ports[l].size() == 0 || ports[l].size() == 2,
               "wire with odd port count");
      if (ports[l].empty()) ++loops;
      std::sort(ports[l].begin(), ports[l].end());
    }

  // orient each closed curve: walk from the smallest untouched wire, strand
  // travelling from its first port to its second; inside a crossing the
  // strand exits at the diagonally opposite port (NW<->SE, NE<->SW)
  auto partner = [](int pr) {
    int p = pr % 4;
    return pr - p + (p == NW ? SE : p == NE ? SW : p == SW ? NE : NW);
  };
  std::vector<int> dir(4 * gx.size(), 0);  // +1 strand enters here, -1 leaves
  for (int l = 1; l <= next; ++l) {
    if (uf.find(l) != l || ports[l].empty() || dir[ports[l][0]] != 0) continue;
    int p = ports[l][0];
    while (true) {
      SK_CHECK(dir[p] == 0, "orientation trace revisited a port");
      dir[p] = -1;
      const auto& pl = ports[uf.find(gx[p / 4].lab[p % 4])];
      int q = pl[0] == p ? pl[1] : pl[0];
      SK_CHECK(dir[q] == 0, "orientation trace collision");
      dir[q] = 1;
      int e = partner(q);
      if (dir[e] != 0) break;  // closed up at the starting port
      p = e;
    }
  }
  for (int i = 0; i < (int)dir.size(); ++i) SK_CHECK(dir[i] != 0, "unoriented port");

  // PD tuple: counterclockwise from the under-strand's entry port
  const int ccw[4] = {NE, NW, SW, SE};
  std::vector<Crossing> cr;
  for (int x = 0; x < (int)gx.size(); ++x) {
    int u0 = gx[x].over_nw ? NE : NW;
    int u1 = gx[x].over_nw ? SW : SE;
    int start = dir[4 * x + u0] > 0 ? u0 : u1;
    SK_CHECK(dir[4 * x + start] > 0, "under-strand has no entry port");
    int at = (int)(std::find(ccw, ccw + 4, start) - ccw);
    Crossing y{};
    for (int k = 0; k < 4; ++k) y.s[k] = uf.find(gx[x].lab[ccw[(at + k) % 4]]);
    cr.push_back(y);
  }
  return finalize_diagram(std::move(cr), loops);
}

}  // namespace slicekit
