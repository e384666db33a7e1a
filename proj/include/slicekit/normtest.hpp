// Deciding whether a Laurent polynomial over a cyclotomic field is a norm,
// i.e. of the form (unit) * g * bar(g).  Two variants: within the field
// itself, and within the union of all 2-power cyclotomic extensions.
#pragma once

#include "slicekit/cyclotomic.hpp"
#include "slicekit/factor.hpp"

namespace slicekit {

// upper bound for the 2-part invariant of the Galois group of an irreducible
// polynomial of the given even degree (2..30); throws NotApplicable otherwise
int d_bound(int degree);

// f != 0 with coefficients in K.  Throws Error(Budget) when factorization
// or the budget gives out.
bool is_norm(const Laurent<CycElem>& f, const CycCtx& K, OpBudget& budget);

// Norm test in the union of the fields of conductor 2^k for all k, for f
// with coefficients in the conductor-2^n field (n >= 1; n = 1 means Q).
bool is_norm_two_tower(const Laurent<CycElem>& f, int n, OpBudget& budget);

// helpers shared with the obstruction drivers
Laurent<CycElem> laurent_of(const Poly<CycElem>& p);
bool self_bar_associate(const Poly<CycElem>& p);

}  // namespace slicekit
