#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slicekit/util.hpp"

namespace slicekit {

// One crossing of a planar diagram.  The four strand labels are listed
// counterclockwise starting at the incoming under-strand; over_bd records the
// over-strand direction (true = slot 1 -> slot 3), which is derived from the
// global orientation, not stored in PD text.  Crossing sign: +1 iff over_bd.
struct Crossing {
  std::array<int, 4> s{};
  bool over_bd = false;
};

// Oriented link diagram: PD crossings plus crossingless unknot components,
// with derived structure (orientations, components, faces) filled in by
// finalize_diagram.  Values are immutable once finalized; all mutating
// operations build a fresh diagram and re-finalize, which re-validates label
// multiplicity, orientability, and planarity (Euler's formula per connected
// piece).
//
// Slot ids are 4*crossing + slot.  A dart is a directed traversal of a
// segment encoded by its arrival slot; the face of a dart lies to the right
// of the travel direction, and faces are the orbits of
//   dart |-> other occurrence of the label one slot counterclockwise.
struct LinkDiagram {
  std::vector<Crossing> cr;
  int free_loops = 0;

  std::unordered_map<int, std::array<int, 2>> occ;  // label -> its two slots
  std::vector<char> head;             // slot -> strand enters the crossing here
  std::unordered_map<int, int> comp;  // label -> component index
  int n_strand_components = 0;
  std::vector<std::vector<int>> faces;  // dart orbits, deterministic order
  std::vector<int> face_of;             // dart -> face index
  std::vector<int> piece_of;            // crossing -> connected piece
  int n_pieces = 0;

  int c() const { return (int)cr.size(); }
  int n_components() const { return n_strand_components + free_loops; }
  int sign(int j) const { return cr[j].over_bd ? 1 : -1; }
  int writhe() const;
  int label(int slot) const { return cr[slot / 4].s[slot % 4]; }
  bool is_over_slot(int slot) const { int k = slot % 4; return k == 1 || k == 3; }
  int other_occ(int slot) const;
  int head_slot(int lbl) const;
  int tail_slot(int lbl) const;
  int next_label(int lbl) const;  // successor strand along the orientation
  int prev_label(int lbl) const;
  int max_label() const;
  bool connected() const { return n_pieces + free_loops == 1; }
};

LinkDiagram finalize_diagram(std::vector<Crossing> cr, int free_loops = 0);

// PD grammar: `PD[` atom (`,` atom)* `]` with atom = `X(a,b,c,d)` or `U`
// (crossingless unknot component); `PD[]` is the 0-crossing unknot.
LinkDiagram parse_pd(const std::string& text);
std::string to_pd_string(const LinkDiagram& d);

LinkDiagram mirror_diagram(const LinkDiagram& d);

// Labels become 1..2c in traversal order (components visited by smallest old
// label); crossing list order preserved.
LinkDiagram relabel_canonical(const LinkDiagram& d);

// Canonical PD string invariant under relabeling: minimizes the sorted
// crossing list over traversal start choices (exact for diagrams with few
// components, greedy beyond; see diagram_fingerprint_exact).
std::string diagram_fingerprint(const LinkDiagram& d);

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d);

// Entry (i,j) = half the signed count of crossings between components i and
// j; diagonal 0.  Component indexing matches LinkDiagram::comp, with free
// loops trailing.
std::vector<std::vector<long long>> linking_matrix(const LinkDiagram& d);

// Connected sum of two knots at the given strands (default: lowest labels).
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                          int strand_a = -1, int strand_b = -1);

// Dual graph of a connected diagram, subdivided: one vertex per face, one per
// segment, one edge per dart (face of the dart -- its segment).
struct DualGraph {
  int n_faces = 0;
  std::vector<int> seg_labels;             // segment-vertex order (ascending)
  std::unordered_map<int, int> seg_index;  // label -> segment-vertex index
  struct Edge {
    int face;
    int seg;
    int dart;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> face_adj;  // face index -> edge ids
  std::vector<std::vector<int>> seg_adj;   // segment index -> edge ids
};
DualGraph build_subdivided_dual(const LinkDiagram& d);

// Words are sequences of signed 1-based generator indices.
struct GroupPresentation {
  int ngens = 0;
  std::vector<std::vector<int>> relators;
  // all crossing relators, one per crossing in crossing order; `relators`
  // drops one per connected piece (redundant as a group presentation, but
  // the full set is needed for Alexander module ranks of links)
  std::vector<std::vector<int>> relators_full;
  std::vector<int> meridians;                // one generator per component
  std::vector<std::vector<int>> longitudes;  // writhe-corrected, per component
  std::vector<int> gen_component;            // component of generator i+1
};

// One generator per arc, one relator per crossing with one redundant relator
// dropped per connected piece; longitude of component i multiplies the over-
// arcs at its underpasses (with crossing signs) and corrects by
// meridian^{-self writhe}.
GroupPresentation wirtinger_presentation(const LinkDiagram& d);

// Braid-closure and plat builders share a grid model: strands at positions
// 1..n, letters bottom out in order; letter +k means the strand entering the
// crossing from position k (upper left) passes over, -k the one from k+1.
// With all strands downward this makes sigma_k^{+1} a sign +1 crossing.
LinkDiagram braid_closure(int n_strands, const std::vector<int>& word);
LinkDiagram plat_diagram(int n_strands, const std::vector<int>& word,
                         const std::vector<std::pair<int, int>>& top_caps,
                         const std::vector<std::pair<int, int>>& bottom_caps);

}  // namespace slicekit
