// Fox free differential calculus over a group presentation, generic in the
// target ring: the caller supplies images of the generators (and their
// inverses) in any ring with the usual operations, e.g. 1x1 Laurent
// monomials for abelianizations or matrices over a group ring for twisted
// coefficients.
#pragma once

#include <vector>

#include "slicekit/diagram.hpp"

namespace slicekit {

// Ops requirements, for some element type T = Ops::Elem:
//   T zero() const, T one() const
//   T image(int gen) const, T inv_image(int gen) const   (gen is 1-based)
//   T add(const T&, const T&) const
//   T mul(const T&, const T&) const
//   T neg(const T&) const

// image of a word (letters are nonzero signed 1-based generator indices)
template <class Ops>
typename Ops::Elem word_image(const std::vector<int>& word, const Ops& ops) {
  auto acc = ops.one();
  for (int l : word)
    acc = ops.mul(acc, l > 0 ? ops.image(l) : ops.inv_image(-l));
  return acc;
}

// Fox derivative d(word)/d(x_j), evaluated through the generator images:
// d(uv) = d(u) + u d(v), d(x_j) = 1, d(x_j^-1) = -x_j^-1.
template <class Ops>
typename Ops::Elem fox_derivative(const std::vector<int>& word, int j,
                                  const Ops& ops) {
  auto acc = ops.zero();
  auto prefix = ops.one();
  for (int l : word) {
    if (l == j) {
      acc = ops.add(acc, prefix);
      prefix = ops.mul(prefix, ops.image(l));
    } else if (l == -j) {
      auto inv = ops.inv_image(-l);
      acc = ops.add(acc, ops.neg(ops.mul(prefix, inv)));
      prefix = ops.mul(prefix, inv);
    } else {
      prefix = ops.mul(prefix, l > 0 ? ops.image(l) : ops.inv_image(-l));
    }
  }
  return acc;
}

// Jacobian of a relator list: one row per relator, one column per generator
template <class Ops>
std::vector<std::vector<typename Ops::Elem>> fox_jacobian(
    const std::vector<std::vector<int>>& relators, int ngens, const Ops& ops) {
  std::vector<std::vector<typename Ops::Elem>> jac;
  jac.reserve(relators.size());
  for (const auto& r : relators) {
    std::vector<typename Ops::Elem> row;
    row.reserve(ngens);
    for (int j = 1; j <= ngens; ++j) row.push_back(fox_derivative(r, j, ops));
    jac.push_back(std::move(row));
  }
  return jac;
}

}  // namespace slicekit
