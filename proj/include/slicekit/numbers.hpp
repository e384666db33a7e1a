// Exact integer / rational arithmetic helpers shared by the algebra layer.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "slicekit/util.hpp"

namespace slicekit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int pow_int(Int b, uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Int isqrt_int(const Int& n);
inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt_int(n);
  if (root) *root = r;
  return r * r == n;
}

// p-adic valuation of n (n != 0).
inline int valuation(Int n, const Int& p) {
  SK_CHECK(n != 0, "valuation of zero");
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

inline bool is_prime_u64(uint64_t n);

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin_u64(uint64_t n);
inline bool is_prime_u64(uint64_t n) { return miller_rabin_u64(n); }

// Writes n = p^k for prime p, returns false if n is not a prime power.
bool prime_power_decompose(uint64_t n, uint64_t* p, int* k);

}  // namespace slicekit
