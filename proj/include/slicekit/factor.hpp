// Exact polynomial factorization: over Q (big-prime modular factorization
// plus subset recombination) and of x^m - 1 over small prime fields.
#pragma once

#include <optional>

#include "slicekit/cyclotomic.hpp"
#include "slicekit/modpoly.hpp"
#include "slicekit/poly.hpp"

namespace slicekit {

// f = unit * prod factors[i].first ^ factors[i].second, with each factor an
// irreducible primitive integer polynomial with positive leading coefficient.
struct QFactorization {
  Rat unit;
  std::vector<std::pair<Poly<Rat>, int>> factors;
};

// nullopt only when the budget runs out
std::optional<QFactorization> factor_poly_q(const Poly<Rat>& f, OpBudget& budget);

// integer-coefficient helpers shared with other modules
std::pair<std::vector<Int>, Rat> to_primitive_int(const Poly<Rat>& f);
Poly<Rat> poly_from_int(const std::vector<Int>& coeffs);
Int content_int(const std::vector<Int>& coeffs);

// Monic irreducible factors (with multiplicity) of a nonzero polynomial over
// the cyclotomic field K; nullopt only when the budget runs out.
std::optional<std::vector<std::pair<Poly<CycElem>, int>>> factor_poly_cyclotomic(
    const Poly<CycElem>& f, const CycCtx& K, OpBudget& budget);

// product of all Galois conjugates of g (g monic over K), an element of Q[x]
Poly<Rat> norm_to_q(const Poly<CycElem>& g, const CycCtx& K);

// monic irreducible factors of x^m - 1 over Z/q, q prime not dividing m;
// the result is checked against the q-cyclotomic coset structure mod m
std::vector<MPoly<SmallMod>> factor_xm1_mod_q(int64_t m, int64_t q);

// sizes of the q-cyclotomic cosets modulo m (sorted ascending)
std::vector<int> cyclotomic_coset_sizes(int64_t m, int64_t q);

}  // namespace slicekit
