#include "slicekit/snf.hpp"

namespace slicekit {

IntMat identity_int(size_t n) {
  IntMat I(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMat mat_mul_int(const IntMat& A, const IntMat& B) {
  size_t r = A.size(), m = B.size(), c = m ? B[0].size() : 0;
  IntMat R(r, std::vector<Int>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < c; ++j) R[i][j] += A[i][k] * B[k][j];
    }
  return R;
}

SnfInt snf_int(IntMat A, bool want_transforms) {
  size_t r = A.size();
  size_t c = r ? A[0].size() : 0;
  SnfInt res;
  if (want_transforms) {
    res.U = identity_int(r);
    res.V = identity_int(c);
  }
  auto row_sub = [&](size_t dst, size_t src, const Int& q) {  // row dst -= q*src
    for (size_t j = 0; j < c; ++j) A[dst][j] -= q * A[src][j];
    if (want_transforms)
      for (size_t j = 0; j < r; ++j) res.U[dst][j] -= q * res.U[src][j];
  };
  auto col_sub = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < r; ++i) A[i][dst] -= q * A[i][src];
    if (want_transforms)
      for (size_t i = 0; i < c; ++i) res.V[i][dst] -= q * res.V[i][src];
  };
  auto row_swap = [&](size_t x, size_t y) {
    if (x == y) return;
    std::swap(A[x], A[y]);
    if (want_transforms) std::swap(res.U[x], res.U[y]);
  };
  auto col_swap = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t i = 0; i < r; ++i) std::swap(A[i][x], A[i][y]);
    if (want_transforms)
      for (size_t i = 0; i < c; ++i) std::swap(res.V[i][x], res.V[i][y]);
  };
  auto row_negate = [&](size_t x) {
    for (size_t j = 0; j < c; ++j) A[x][j] = -A[x][j];
    if (want_transforms)
      for (size_t j = 0; j < r; ++j) res.U[x][j] = -res.U[x][j];
  };

  size_t k = 0;
  while (k < r && k < c) {
    size_t pi = k, pj = k;
    bool found = false;
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < c; ++j)
        if (A[i][j] != 0 &&
            (!found || abs_int(A[i][j]) < abs_int(A[pi][pj]))) {
          pi = i; pj = j; found = true;
        }
    if (!found) break;
    row_swap(k, pi);
    col_swap(k, pj);
    if (A[k][k] < 0) row_negate(k);

    bool clean = true;
    for (size_t i = k + 1; i < r; ++i)
      if (A[i][k] != 0) { clean = false; break; }
    if (clean)
      for (size_t j = k + 1; j < c; ++j)
        if (A[k][j] != 0) { clean = false; break; }
    if (!clean) {
      for (size_t i = k + 1; i < r; ++i) {
        if (A[i][k] == 0) continue;
        // floor behaviour is irrelevant; any quotient shrinks the remainder
        Int q = A[i][k] / A[k][k];
        if (q != 0) row_sub(i, k, q);
      }
      for (size_t j = k + 1; j < c; ++j) {
        if (A[k][j] == 0) continue;
        Int q = A[k][j] / A[k][k];
        if (q != 0) col_sub(j, k, q);
      }
      continue;
    }

    bool redo = false;
    for (size_t i = k + 1; i < r && !redo; ++i)
      for (size_t j = k + 1; j < c && !redo; ++j)
        if (A[i][j] % A[k][k] != 0) {
          row_sub(k, i, Int(-1));  // fold row i into the pivot row
          redo = true;
        }
    if (redo) continue;
    ++k;
  }

  res.rank = (int)k;
  size_t dlen = std::min(r, c);
  res.diag.assign(dlen, 0);
  for (size_t i = 0; i < k; ++i) res.diag[i] = A[i][i];
  return res;
}

}  // namespace slicekit
