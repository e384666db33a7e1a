#include "slicekit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace slicekit {

int LinkDiagram::writhe() const {
  int w = 0;
  for (int j = 0; j < c(); ++j) w += sign(j);
  return w;
}

int LinkDiagram::other_occ(int slot) const {
  const auto& o = occ.at(label(slot));
  return o[0] == slot ? o[1] : o[0];
}

int LinkDiagram::head_slot(int lbl) const {
  const auto& o = occ.at(lbl);
  return head[o[0]] ? o[0] : o[1];
}

int LinkDiagram::tail_slot(int lbl) const {
  const auto& o = occ.at(lbl);
  return head[o[0]] ? o[1] : o[0];
}

int LinkDiagram::next_label(int lbl) const {
  int s = head_slot(lbl);
  int j = s / 4, k = s % 4;
  int out;
  switch (k) {
    case 0: out = 2; break;
    case 1: out = 3; break;
    case 3: out = 1; break;
    default: SK_CHECK(false, "strand arrives at an outgoing slot"); out = 0;
  }
  return cr[j].s[out];
}

int LinkDiagram::prev_label(int lbl) const {
  int s = tail_slot(lbl);
  int j = s / 4, k = s % 4;
  int in;
  switch (k) {
    case 2: in = 0; break;
    case 3: in = 1; break;
    case 1: in = 3; break;
    default: SK_CHECK(false, "strand leaves from an incoming slot"); in = 0;
  }
  return cr[j].s[in];
}

int LinkDiagram::max_label() const {
  int m = 0;
  for (const auto& x : cr)
    for (int l : x.s) m = std::max(m, l);
  return m;
}

namespace {

// Orientation resolution: each slot is head (strand enters) or tail.  Slots 0
// and 2 are forced by the PD convention; the over slots of one crossing are
// opposite; the two occurrences of one label are opposite.  Components that
// never pass under leave free choices, fixed by smallest-slot-first.
std::vector<char> resolve_heads(const std::vector<Crossing>& cr,
                                const std::unordered_map<int, std::array<int, 2>>& occ) {
  int n = 4 * (int)cr.size();
  std::vector<int> st(n, 0);  // 0 unknown, +1 head, -1 tail
  std::deque<int> work;
  auto set = [&](int slot, int v) {
    if (st[slot] == v) return;
    if (st[slot] != 0) throw parse_error("inconsistent strand orientations in PD code");
    st[slot] = v;
    work.push_back(slot);
  };
  for (int j = 0; j < (int)cr.size(); ++j) {
    set(4 * j + 0, 1);
    set(4 * j + 2, -1);
  }
  auto drain = [&]() {
    while (!work.empty()) {
      int s = work.front();
      work.pop_front();
      const auto& o = occ.at(cr[s / 4].s[s % 4]);
      set(o[0] == s ? o[1] : o[0], -st[s]);
      int k = s % 4;
      if (k == 1 || k == 3) set(k == 1 ? s + 2 : s - 2, -st[s]);
    }
  };
  drain();
  for (int s = 0; s < n; ++s)
    if (st[s] == 0) {
      set(s, 1);
      drain();
    }
  std::vector<char> h(n);
  for (int s = 0; s < n; ++s) h[s] = st[s] > 0;
  return h;
}

}  // namespace

LinkDiagram finalize_diagram(std::vector<Crossing> cr, int free_loops) {
  if (free_loops < 0) throw parse_error("negative free loop count");
  if (cr.empty() && free_loops == 0) throw parse_error("empty diagram");
  LinkDiagram d;
  d.cr = std::move(cr);
  d.free_loops = free_loops;
  int n = 4 * d.c();

  for (int s = 0; s < n; ++s) {
    int l = d.cr[s / 4].s[s % 4];
    if (l <= 0) throw parse_error("strand labels must be positive");
    auto [it, fresh] = d.occ.try_emplace(l, std::array<int, 2>{s, -1});
    if (!fresh) {
      if (it->second[1] != -1)
        throw parse_error("strand " + std::to_string(l) + " occurs more than twice");
      it->second[1] = s;
    }
  }
  int lone = 0;
  for (const auto& [l, o] : d.occ)
    if (o[1] == -1 && (lone == 0 || l < lone)) lone = l;
  if (lone) throw parse_error("strand " + std::to_string(lone) + " occurs once");

  d.head = resolve_heads(d.cr, d.occ);
  for (int j = 0; j < d.c(); ++j) d.cr[j].over_bd = d.head[4 * j + 1];

  // components: orbits of next_label, numbered by smallest label
  std::vector<int> labels;
  labels.reserve(d.occ.size());
  for (const auto& [l, o] : d.occ) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  for (int l0 : labels) {
    if (d.comp.count(l0)) continue;
    int idx = d.n_strand_components++;
    for (int l = l0; !d.comp.count(l); l = d.next_label(l)) d.comp[l] = idx;
  }

  // connected pieces of the underlying 4-valent graph
  std::vector<int> uf(d.c());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& [l, o] : d.occ) uf[find(o[0] / 4)] = find(o[1] / 4);
  d.piece_of.assign(d.c(), -1);
  for (int j = 0; j < d.c(); ++j) {
    int r = find(j);
    if (d.piece_of[r] == -1) d.piece_of[r] = d.n_pieces++;
    d.piece_of[j] = d.piece_of[r];
  }

  // faces as dart orbits; a dart arriving at slot (j,k) continues into the
  // other occurrence of the label one slot counterclockwise
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(n, 0);
  for (int s0 = 0; s0 < n; ++s0) {
    if (seen[s0]) continue;
    std::vector<int> orbit;
    int s = s0;
    do {
      seen[s] = 1;
      orbit.push_back(s);
      int j = s / 4, k = s % 4;
      s = d.other_occ(4 * j + (k + 1) % 4);
    } while (s != s0);
    orbits.push_back(std::move(orbit));
  }
  std::vector<int> piece_faces(d.n_pieces, 0), piece_cr(d.n_pieces, 0);
  for (int j = 0; j < d.c(); ++j) ++piece_cr[d.piece_of[j]];
  for (const auto& f : orbits) ++piece_faces[d.piece_of[f[0] / 4]];
  for (int p = 0; p < d.n_pieces; ++p)
    if (piece_faces[p] != piece_cr[p] + 2)
      throw parse_error("PD code is not planar (Euler check failed)");

  // deterministic face order: by sorted incident label list, then min dart
  std::vector<std::pair<std::vector<int>, int>> keys;
  for (auto& f : orbits) {
    int arg = 0;
    for (int i = 1; i < (int)f.size(); ++i)
      if (f[i] < f[arg]) arg = i;
    std::rotate(f.begin(), f.begin() + arg, f.end());
    std::vector<int> key;
    key.reserve(f.size() + 1);
    for (int s : f) key.push_back(d.label(s));
    std::sort(key.begin(), key.end());
    key.push_back(f[0]);
    keys.push_back({std::move(key), (int)keys.size()});
  }
  std::sort(keys.begin(), keys.end());
  d.face_of.assign(n, -1);
  for (auto& [key, i] : keys) {
    d.faces.push_back(std::move(orbits[i]));
    for (int s : d.faces.back()) d.face_of[s] = (int)d.faces.size() - 1;
  }
  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto expect = [&](const std::string& tok) {
    skip();
    if (text.compare(i, tok.size(), tok) != 0)
      throw parse_error("PD syntax error: expected '" + tok + "' at offset " +
                        std::to_string(i));
    i += tok.size();
  };
  auto number = [&]() {
    skip();
    size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start)
      throw parse_error("PD syntax error: expected integer at offset " +
                        std::to_string(start));
    long v = std::stol(text.substr(start, i - start));
    if (v <= 0 || v > 1000000000) throw parse_error("strand label out of range");
    return (int)v;
  };
  expect("PD");
  expect("[");
  std::vector<Crossing> cr;
  int loops = 0;
  skip();
  if (i < text.size() && text[i] != ']') {
    while (true) {
      skip();
      if (i < text.size() && text[i] == 'U') {
        ++i;
        ++loops;
      } else {
        expect("X");
        expect("(");
        Crossing x;
        for (int k = 0; k < 4; ++k) {
          if (k) expect(",");
          x.s[k] = number();
        }
        expect(")");
        cr.push_back(x);
      }
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  expect("]");
  skip();
  if (i != text.size()) throw parse_error("PD syntax error: trailing input");
  if (cr.empty() && loops == 0) loops = 1;  // PD[] is the unknot
  return finalize_diagram(std::move(cr), loops);
}

std::string to_pd_string(const LinkDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (int u = 0; u < d.free_loops; ++u) {
    if (!first) os << ",";
    os << "U";
    first = false;
  }
  for (const auto& x : d.cr) {
    if (!first) os << ",";
    os << "X(" << x.s[0] << "," << x.s[1] << "," << x.s[2] << "," << x.s[3] << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

LinkDiagram mirror_diagram(const LinkDiagram& d) {
  std::vector<Crossing> cr = d.cr;
  for (int j = 0; j < d.c(); ++j) {
    const auto& s = d.cr[j].s;
    // switching the crossing makes the old over-strand the under-strand; the
    // tuple restarts at its incoming end, keeping the counterclockwise order
    cr[j].s = d.cr[j].over_bd ? std::array<int, 4>{s[1], s[2], s[3], s[0]}
                              : std::array<int, 4>{s[3], s[0], s[1], s[2]};
  }
  return finalize_diagram(std::move(cr), d.free_loops);
}

namespace {

// Rename labels to 1..2c by walking components: first from each requested
// start, then from the smallest original label of each untouched component.
std::unordered_map<int, int> walk_renaming(const LinkDiagram& d,
                                           const std::vector<int>& starts) {
  std::unordered_map<int, int> ren;
  int next = 0;
  auto walk = [&](int l0) {
    for (int l = l0; !ren.count(l); l = d.next_label(l)) ren[l] = ++next;
  };
  for (int s : starts) walk(s);
  std::vector<int> labels;
  labels.reserve(d.occ.size());
  for (const auto& [l, o] : d.occ) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  for (int l : labels)
    if (!ren.count(l)) walk(l);
  return ren;
}

std::vector<std::array<int, 4>> renamed_sorted_tuples(const LinkDiagram& d,
                                                      const std::vector<int>& starts) {
  auto ren = walk_renaming(d, starts);
  std::vector<std::array<int, 4>> t;
  t.reserve(d.cr.size());
  for (const auto& x : d.cr) {
    std::array<int, 4> y;
    for (int k = 0; k < 4; ++k) y[k] = ren.at(x.s[k]);
    t.push_back(y);
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

LinkDiagram relabel_canonical(const LinkDiagram& d) {
  auto ren = walk_renaming(d, {});
  std::vector<Crossing> cr = d.cr;
  for (auto& x : cr)
    for (int& l : x.s) l = ren.at(l);
  return finalize_diagram(std::move(cr), d.free_loops);
}

std::string diagram_fingerprint(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> best;
  if (d.c() > 0) {
    // minimize over traversal starts: every label for the first walk, and for
    // 2-component diagrams every label of the second component as well (which
    // makes the result relabeling-invariant there; more components fall back
    // to a deterministic greedy continuation)
    std::vector<int> labels;
    for (const auto& [l, o] : d.occ) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    for (int s1 : labels) {
      if (d.n_strand_components == 2) {
        int c1 = d.comp.at(s1);
        for (int s2 : labels) {
          if (d.comp.at(s2) == c1) continue;
          auto t = renamed_sorted_tuples(d, {s1, s2});
          if (best.empty() || t < best) best = std::move(t);
        }
      } else {
        auto t = renamed_sorted_tuples(d, {s1});
        if (best.empty() || t < best) best = std::move(t);
      }
    }
  }
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (int u = 0; u < d.free_loops; ++u) {
    if (!first) os << ",";
    os << "U";
    first = false;
  }
  for (const auto& s : best) {
    if (!first) os << ",";
    os << "X(" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (int p = 0; p < d.n_pieces; ++p) {
    std::vector<Crossing> cr;
    for (int j = 0; j < d.c(); ++j)
      if (d.piece_of[j] == p) cr.push_back(d.cr[j]);
    out.push_back(finalize_diagram(std::move(cr), 0));
  }
  for (int u = 0; u < d.free_loops; ++u) out.push_back(finalize_diagram({}, 1));
  return out;
}

std::vector<std::vector<long long>> linking_matrix(const LinkDiagram& d) {
  int n = d.n_components();
  std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
  for (int j = 0; j < d.c(); ++j) {
    int cu = d.comp.at(d.cr[j].s[0]);
    int co = d.comp.at(d.cr[j].s[1]);
    if (cu == co) continue;
    lk[cu][co] += d.sign(j);
    lk[co][cu] += d.sign(j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SK_CHECK(lk[i][j] % 2 == 0, "odd mixed-crossing count");
      lk[i][j] /= 2;
    }
  return lk;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                          int strand_a, int strand_b) {
  if (a.n_components() != 1 || b.n_components() != 1)
    throw Error(ErrKind::NotApplicable, "connected sum needs knots");
  if (a.c() == 0) return b;
  if (b.c() == 0) return a;
  if (strand_a < 0)
    for (const auto& [l, o] : a.occ) strand_a = strand_a < 0 ? l : std::min(strand_a, l);
  if (strand_b < 0)
    for (const auto& [l, o] : b.occ) strand_b = strand_b < 0 ? l : std::min(strand_b, l);
  SK_CHECK(a.occ.count(strand_a) && b.occ.count(strand_b), "bad site strands");

  int shift = a.max_label();
  std::vector<Crossing> cr = a.cr;
  for (const auto& x : b.cr) {
    Crossing y = x;
    for (int& l : y.s) l += shift;
    cr.push_back(y);
  }
  // cut both strands and cross-join, preserving orientations: the arc into
  // strand_a's old head now carries what flows out of strand_b's tail, and
  // vice versa, so each head occurrence swaps to the other diagram's label
  int ha = a.head_slot(strand_a);
  int hb = b.head_slot(strand_b);
  cr[ha / 4].s[ha % 4] = strand_b + shift;
  cr[a.c() + hb / 4].s[hb % 4] = strand_a;
  return finalize_diagram(std::move(cr), 0);
}

DualGraph build_subdivided_dual(const LinkDiagram& d) {
  if (!d.connected() || d.c() == 0)
    throw Error(ErrKind::NotApplicable, "subdivided dual needs a connected diagram");
  DualGraph g;
  g.n_faces = (int)d.faces.size();
  for (const auto& [l, o] : d.occ) g.seg_labels.push_back(l);
  std::sort(g.seg_labels.begin(), g.seg_labels.end());
  for (int i = 0; i < (int)g.seg_labels.size(); ++i) g.seg_index[g.seg_labels[i]] = i;
  g.face_adj.resize(g.n_faces);
  g.seg_adj.resize(g.seg_labels.size());
  // one edge per dart, ordered by (segment label, dart)
  std::vector<std::pair<int, int>> darts;
  darts.reserve(4 * d.c());
  for (int s = 0; s < 4 * d.c(); ++s) darts.push_back({d.label(s), s});
  std::sort(darts.begin(), darts.end());
  for (auto& [l, s] : darts) {
    DualGraph::Edge e{d.face_of[s], g.seg_index.at(l), s};
    g.face_adj[e.face].push_back((int)g.edges.size());
    g.seg_adj[e.seg].push_back((int)g.edges.size());
    g.edges.push_back(e);
  }
  return g;
}

GroupPresentation wirtinger_presentation(const LinkDiagram& d) {
  GroupPresentation p;
  // arcs: labels merged along the over-strand at each crossing
  std::map<int, int> arc_uf;
  for (const auto& [l, o] : d.occ) arc_uf[l] = l;
  std::function<int(int)> find = [&](int x) {
    while (arc_uf[x] != x) x = arc_uf[x] = arc_uf[arc_uf[x]];
    return x;
  };
  for (const auto& x : d.cr) {
    int r1 = find(x.s[1]), r2 = find(x.s[3]);
    if (r1 != r2) arc_uf[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::map<int, int> arc_id;  // representative label -> 1-based generator
  for (auto& [l, r] : arc_uf)
    if (find(l) == l) {
      int id = (int)arc_id.size() + 1;
      arc_id[l] = id;
    }
  auto gen = [&](int lbl) { return arc_id.at(find(lbl)); };
  p.ngens = (int)arc_id.size() + d.free_loops;
  p.gen_component.resize(p.ngens, -1);
  for (const auto& [l, id] : arc_id) p.gen_component[id - 1] = d.comp.at(l);
  for (int u = 0; u < d.free_loops; ++u)
    p.gen_component[arc_id.size() + u] = d.n_strand_components + u;

  // one relator per crossing, dropping the last crossing of each piece
  std::vector<int> drop(d.n_pieces, -1);
  for (int j = 0; j < d.c(); ++j) drop[d.piece_of[j]] = j;
  for (int j = 0; j < d.c(); ++j) {
    int o = gen(d.cr[j].s[1]);
    int u = gen(d.cr[j].s[0]);
    int v = gen(d.cr[j].s[2]);
    int e = d.sign(j);
    p.relators_full.push_back({e * o, u, -e * o, -v});
    if (std::find(drop.begin(), drop.end(), j) == drop.end())
      p.relators.push_back(p.relators_full.back());
  }

  // meridian of each strand component: the arc of its smallest label
  std::vector<int> min_label(d.n_strand_components, 0);
  for (const auto& [l, ci] : d.comp)
    if (!min_label[ci] || l < min_label[ci]) min_label[ci] = l;
  for (int ci = 0; ci < d.n_strand_components; ++ci)
    p.meridians.push_back(gen(min_label[ci]));
  for (int u = 0; u < d.free_loops; ++u)
    p.meridians.push_back((int)arc_id.size() + 1 + u);

  // longitudes: over-arcs at underpasses along the traversal, with crossing
  // signs, then meridian^{-self writhe}
  for (int ci = 0; ci < d.n_strand_components; ++ci) {
    std::vector<int> word;
    int w = 0;
    int l0 = min_label[ci];
    int l = l0;
    do {
      int s = d.head_slot(l);
      if (s % 4 == 0) {
        int j = s / 4;
        word.push_back(d.sign(j) * gen(d.cr[j].s[1]));
        if (d.comp.at(d.cr[j].s[1]) == ci) w += d.sign(j);
      }
      l = d.next_label(l);
    } while (l != l0);
    int m = p.meridians[ci];
    for (int i = 0; i < std::abs(w); ++i) word.push_back(w > 0 ? -m : m);
    p.longitudes.push_back(std::move(word));
  }
  for (int u = 0; u < d.free_loops; ++u) p.longitudes.push_back({});
  return p;
}

}  // namespace slicekit
