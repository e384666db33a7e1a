#include "slicekit/numbers.hpp"

namespace slicekit {

Int isqrt_int(const Int& n) {
  SK_CHECK(n >= 0, "isqrt of negative");
  if (n == 0) return 0;
  Int x = Int(1) << ((boost::multiprecision::msb(n) / 2) + 1);
  while (true) {
    Int y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

namespace {
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}
uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool miller_rabin_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Sufficient witness set for all 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

bool prime_power_decompose(uint64_t n, uint64_t* p, int* k) {
  if (n < 2) return false;
  for (int e = 63; e >= 1; --e) {
    // candidate root r = round(n^(1/e))
    uint64_t r = (uint64_t)std::llround(std::pow((double)n, 1.0 / e));
    for (uint64_t c = (r > 2 ? r - 2 : 1); c <= r + 2; ++c) {
      if (c < 2) continue;
      // c^e == n ?
      __uint128_t v = 1;
      bool of = false;
      for (int i = 0; i < e; ++i) {
        v *= c;
        if (v > (__uint128_t)UINT64_MAX) { of = true; break; }
      }
      if (!of && v == n && is_prime_u64(c)) {
        *p = c;
        *k = e;
        return true;
      }
    }
  }
  return false;
}

}  // namespace slicekit
