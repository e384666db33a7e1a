// Constructible knot families with exactly known diagrams: rational (2-bridge)
// knots as alternating 4-plats of continued fractions, three-strand pretzels
// as 6-plats, torus knots as braid closures, and the generated knot table
// that enumerates one representative per knot (up to mirror image) within a
// crossing bound.
#pragma once

#include <string>
#include <vector>

#include "slicekit/diagram.hpp"

namespace slicekit {

// Positive continued fraction [a1, a2, ...] of p/q with 0 < q < p, all terms
// >= 1, padded to odd length ([.., ak] -> [.., ak-1, 1]) so that a 4-plat
// realizes it.  The term sum is the diagram crossing count.
std::vector<int> odd_continued_fraction(int p, int q);

// Alternating 4-plat of the rational knot or link with fraction p/q.
LinkDiagram rational_diagram(int p, int q);

// Three-tangle pretzel; each parameter is a signed vertical twist count.
// All parameters odd gives a knot.
LinkDiagram pretzel_diagram(int a, int b, int c);

// (p,q) torus knot or link as the closure of (s1 s2 ... s_{p-1})^q.
LinkDiagram torus_diagram(int p, int q);

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

// All rational knots with diagram crossing count in [3, max_c], one
// representative per knot up to mirror image, plus the three-strand pretzel
// knots (all twist counts odd, magnitude >= 3 so nothing collapses into the
// rational family) and the torus knots of braid index >= 3 in range.
// Deterministic: sorted by crossing count, then name.
std::vector<NamedDiagram> knot_table(int max_c);

}  // namespace slicekit
