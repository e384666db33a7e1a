// Smith normal form over Z (with unimodular transforms) and over F[t] for an
// exact field F (invariant factors only).
#pragma once

#include "slicekit/poly.hpp"

namespace slicekit {

using IntMat = std::vector<std::vector<Int>>;

struct SnfInt {
  std::vector<Int> diag;  // nonnegative, diag[i] | diag[i+1]; zeros trail
  IntMat U, V;            // U * A * V = diag(diag), both unimodular
  int rank = 0;           // number of nonzero diagonal entries
};

// A is r x c (rows of equal length); empty dimensions allowed
SnfInt snf_int(IntMat A, bool want_transforms = true);

IntMat mat_mul_int(const IntMat& A, const IntMat& B);
IntMat identity_int(size_t n);

// invariant factors of coker over F[t]: returns monic nonzero diagonal
// entries d_1 | d_2 | ... ; `rank` receives their count
template <class F>
std::vector<Poly<F>> snf_poly(std::vector<std::vector<Poly<F>>> A, int* rank_out) {
  size_t r = A.size();
  size_t c = r ? A[0].size() : 0;
  size_t k = 0;
  auto nonzero_at = [&](size_t i, size_t j) { return !A[i][j].is_zero(); };
  while (k < r && k < c) {
    // locate minimal-degree pivot in the trailing submatrix
    size_t pi = k, pj = k;
    bool found = false;
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < c; ++j)
        if (nonzero_at(i, j) &&
            (!found || A[i][j].degree() < A[pi][pj].degree())) {
          pi = i; pj = j; found = true;
        }
    if (!found) break;
    std::swap(A[k], A[pi]);
    if (pj != k)
      for (size_t i = 0; i < r; ++i) std::swap(A[i][k], A[i][pj]);

    bool clean = true;
    for (size_t i = k + 1; i < r && clean; ++i)
      if (nonzero_at(i, k)) clean = false;
    for (size_t j = k + 1; j < c && clean; ++j)
      if (nonzero_at(k, j)) clean = false;
    if (!clean) {
      // one round of Euclidean reduction against the pivot, then re-pivot
      for (size_t i = k + 1; i < r; ++i) {
        if (!nonzero_at(i, k)) continue;
        Poly<F> q = divmod(A[i][k], A[k][k]).first;
        if (q.is_zero()) continue;
        for (size_t j = k; j < c; ++j) A[i][j] = sub(A[i][j], mul(q, A[k][j]));
      }
      for (size_t j = k + 1; j < c; ++j) {
        if (!nonzero_at(k, j)) continue;
        Poly<F> q = divmod(A[k][j], A[k][k]).first;
        if (q.is_zero()) continue;
        for (size_t i = k; i < r; ++i) A[i][j] = sub(A[i][j], mul(q, A[i][k]));
      }
      continue;  // degrees strictly drop, so this terminates
    }

    // enforce divisibility of the remaining block by the pivot
    bool redo = false;
    for (size_t i = k + 1; i < r && !redo; ++i)
      for (size_t j = k + 1; j < c && !redo; ++j) {
        if (A[i][j].is_zero()) continue;
        if (!divmod(A[i][j], A[k][k]).second.is_zero()) {
          for (size_t jj = k; jj < c; ++jj) A[k][jj] = add(A[k][jj], A[i][jj]);
          redo = true;
        }
      }
    if (redo) continue;
    ++k;
  }
  std::vector<Poly<F>> out;
  for (size_t i = 0; i < k; ++i) out.push_back(make_monic(A[i][i]));
  if (rank_out) *rank_out = (int)k;
  return out;
}

}  // namespace slicekit
