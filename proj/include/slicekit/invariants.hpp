// Abelian invariants of knots and links computed from diagrams: Seifert
// matrices via braid form, the Alexander polynomial (two independent
// routes), signature, determinant, the Fox-Milnor norm test, and the
// multivariable pruning data for links.
#pragma once

#include "slicekit/diagram.hpp"
#include "slicekit/multivar.hpp"
#include "slicekit/poly.hpp"
#include "slicekit/snf.hpp"
#include "slicekit/util.hpp"

namespace slicekit {

struct SeifertMatrix {
  IntMat v;  // square; rank of H_1 of the surface = 1 - chi
  size_t size() const { return v.size(); }
};

// Seifert matrix of the surface from the orientation-respecting smoothing
// of a connected diagram (throws NotApplicable when disconnected).  The
// diagram is first brought to closed-braid form by coherence-improving
// R2 moves, so the surface is a stack of disks joined by twisted bands.
SeifertMatrix seifert_matrix(const LinkDiagram& d);

// the braid form itself, exposed for tests and debugging
struct BraidForm {
  LinkDiagram diagram;    // reduced diagram, same link type as the input
  int n_strands = 1;
  std::vector<int> word;  // letters +-k; strand 1 is the innermost circle
};
BraidForm braid_form(const LinkDiagram& d);

using AlexPoly = Laurent<Rat>;  // integer coefficients in practice

// canonical form shared by both routes: lowest exponent 0, positive leading
// coefficient
AlexPoly normalize_alexander(const AlexPoly& p);

// det(V - t V^T) from the Seifert matrix; knots only
AlexPoly alexander_polynomial(const LinkDiagram& d);

// independent route: Fox Jacobian of the Wirtinger presentation, one column
// deleted; knots only
AlexPoly alexander_via_wirtinger(const LinkDiagram& d);

// signature of V + V^T by exact congruence diagonalization
int signature(const LinkDiagram& d);

// |Delta(-1)|
Int knot_determinant(const LinkDiagram& d);

// Is delta = unit * f * bar(f) over Z[t,1/t]?  Requires delta(1) = +-1 and
// delta symmetric (throws NotApplicable otherwise).  Decided over Q by the
// cyclotomic norm test at conductor 1; Gauss's lemma lifts the result to Z.
bool fox_milnor_test(const AlexPoly& delta);

// sigma == 0 and the Alexander polynomial passes Fox-Milnor
bool plausibly_slice(const LinkDiagram& d);

// exact order of the first homology of the m-fold cyclic branched cover
// predicted by the Alexander polynomial: prod_j |Delta(zeta_m^j)|, as a
// resultant; 0 encodes an infinite group
Int branched_order_oracle(const AlexPoly& delta, int m);

struct MultivariablePruneData {
  int nullity = 0;
  MLaurent first_poly;      // first nonvanishing Alexander polynomial
  bool fox_milnor_link = false;
  bool indeterminate = false;  // budget ran out; callers must treat as pass
};

// Multivariable pruning data for a link with >= 2 components: Alexander
// nullity, the first nonvanishing multivariable Alexander polynomial (gcd
// of a bounded sample of maximal minors), and the sound fragment of the
// multivariable Fox-Milnor condition (nullity == mu - 1 and the polynomial
// evaluated at every t_i = -1 has square absolute value).
MultivariablePruneData multivariable_prune_data(const LinkDiagram& d,
                                                OpBudget& budget);

}  // namespace slicekit
