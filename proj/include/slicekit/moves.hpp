// Reidemeister moves on PD diagrams: single-move primitives, monotone
// reduction, and seeded shaking.  Every mutator returns a freshly finalized
// diagram (label multiplicity, orientation, and planarity re-validated), so a
// surgery bug fails loudly instead of corrupting downstream invariants.
#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/diagram.hpp"

namespace slicekit {

// R1 insertion: curl the segment `label`.  Variants 0..3 pick which pass of
// the new self-crossing goes under and the curl chirality; 0 and 2 make a
// positive crossing, 1 and 3 a negative one.
LinkDiagram kink_insert(const LinkDiagram& d, int label, int variant);
// R1 insertion on a crossingless component (requires free_loops > 0);
// variant 0 = positive crossing, 1 = negative.
LinkDiagram kink_free_loop(const LinkDiagram& d, int variant);
// Crossings carrying a curl: some label occupies two cyclically adjacent
// slots.  Ascending crossing order.
std::vector<int> kink_sites(const LinkDiagram& d);
LinkDiagram kink_remove(const LinkDiagram& d, int crossing);

// R2 insertion: push a finger of the strand of dart `mover` across the
// strand of dart `target`, passing over it when mover_over.  Legal when the
// two darts lie on one face, or when the strands live in different connected
// pieces (distant pieces can always be slid next to each other first).
LinkDiagram poke_insert(const LinkDiagram& d, int mover, int target,
                        bool mover_over);
bool poke_legal(const LinkDiagram& d, int mover, int target);
// R2 insertion pushing a crossingless component across the segment of
// `target` (requires free_loops > 0).
LinkDiagram poke_free_loop(const LinkDiagram& d, int target, bool loop_over);
// R2-removable faces: two darts, distinct segments and crossings, one side
// passing over at both corners.  Ascending face order.
std::vector<int> bigon_sites(const LinkDiagram& d);
LinkDiagram bigon_remove(const LinkDiagram& d, int face);

// R3: slide one side of a triangular face across the opposite crossing.
// A side qualifies when it passes over both its corners or under both and
// the local picture is non-degenerate (three distinct sides and corners,
// distinct far segments at the opposite crossing).
struct TriangleSite {
  int face = -1;
  int slider_dart = -1;
};
std::vector<TriangleSite> triangle_sites(const LinkDiagram& d);
LinkDiagram triangle_slide(const LinkDiagram& d, const TriangleSite& t);

// Crossing-count-monotone simplification: greedy R1/R2 removals, with a
// bounded breadth-first search through R3 slides to unlock further removals
// when stuck.  Deterministic; never increases the crossing count; stops at
// move_budget returning the best diagram so far.
LinkDiagram reduce_diagram(const LinkDiagram& d, int move_budget = 4096);

// Seeded random walk over the full move set followed by reduce_diagram.
// Deterministic given (seed, moves); output is isotopic to the input.
LinkDiagram shake_diagram(const LinkDiagram& d, uint64_t seed, int moves = 24);

// Insertion-and-slide-only seeded walk: obscures a diagram without
// simplifying it afterwards (regression-corpus construction).
LinkDiagram tangle_diagram(const LinkDiagram& d, uint64_t seed, int moves);

}  // namespace slicekit
