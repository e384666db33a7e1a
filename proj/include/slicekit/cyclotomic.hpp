// Exact arithmetic in cyclotomic fields Q(zeta_n).  Elements are coordinate
// vectors in the power basis 1, z, ..., z^(phi(n)-1) modulo the n-th
// cyclotomic polynomial.  Contexts are interned per conductor.
#pragma once

#include <string>

#include "slicekit/poly.hpp"

namespace slicekit {

struct CycCtx;

// A default-constructed element carries no context and denotes zero; it mixes
// freely with elements of any context.  All nonzero values carry their field.
struct CycElem {
  const CycCtx* ctx = nullptr;
  std::vector<Rat> a;  // size phi(n) when ctx != nullptr

  CycElem() = default;
  CycElem(const CycCtx* c, std::vector<Rat> coords) : ctx(c), a(std::move(coords)) {}

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // coordinate of 1 (requires ctx or zero)

  CycElem operator+(const CycElem& o) const;
  CycElem operator-(const CycElem& o) const;
  CycElem operator*(const CycElem& o) const;
  CycElem operator/(const CycElem& o) const;
  bool operator==(const CycElem& o) const;
  bool operator!=(const CycElem& o) const { return !(*this == o); }
};

struct CycCtx {
  int n = 1;          // conductor
  int phi = 1;        // degree over Q
  std::vector<Int> min_poly;  // cyclotomic polynomial of order n, monic
  std::vector<std::vector<Rat>> xpow;  // z^k coordinates, k = 0 .. max(2*phi-2, n-1)

  CycElem zero() const { return CycElem(); }
  CycElem one() const { return from_rat(Rat(1)); }
  CycElem from_rat(const Rat& r) const;
  CycElem zeta(int k = 1) const;  // z^k, any integer k (reduced mod n)

  CycElem add(const CycElem& x, const CycElem& y) const;
  CycElem sub(const CycElem& x, const CycElem& y) const;
  CycElem neg(const CycElem& x) const;
  CycElem mul(const CycElem& x, const CycElem& y) const;
  CycElem inv(const CycElem& x) const;

  // Galois automorphism z -> z^s, gcd(s, n) = 1
  CycElem galois(const CycElem& x, int s) const;
  // complex conjugation z -> z^(n-1)
  CycElem conj(const CycElem& x) const { return galois(x, n == 1 ? 1 : n - 1); }
  // inclusion Q(zeta_d) -> Q(zeta_n) for d | n
  CycElem embed(const CycElem& x) const;

  std::string to_string(const CycElem& x) const;
};

// interned context for conductor n (thread-safe)
const CycCtx& cyc_ctx(int n);

// cyclotomic polynomial of order n, integer coefficients, monic
std::vector<Int> cyclotomic_poly(int n);

int euler_phi(int n);

inline CycElem one_like(const CycElem& x) {
  SK_CHECK(x.ctx != nullptr, "one_like on context-free zero");
  return x.ctx->one();
}
inline CycElem coeff_conj(const CycElem& x) {
  return x.ctx ? x.ctx->conj(x) : x;
}

}  // namespace slicekit
