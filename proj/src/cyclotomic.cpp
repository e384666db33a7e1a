#include "slicekit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace slicekit {

int euler_phi(int n) {
  SK_CHECK(n >= 1, "euler_phi of nonpositive");
  int r = n;
  for (int p = 2; (int64_t)p * p <= n; ++p) {
    if (n % p) continue;
    r -= r / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// exact division of integer polynomials, checked
std::vector<Int> div_int_poly(const std::vector<Int>& a, const std::vector<Int>& b) {
  SK_CHECK(!b.empty() && b.back() == 1, "divisor must be monic");
  std::vector<Int> rem = a;
  SK_CHECK(rem.size() >= b.size(), "division underflow");
  std::vector<Int> q(rem.size() - b.size() + 1);
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    Int f = rem[k + b.size() - 1];
    q[k] = f;
    if (f == 0) continue;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
  }
  for (const Int& c : rem) SK_CHECK(c == 0, "inexact cyclotomic division");
  return q;
}

std::map<int, std::vector<Int>>& cyclo_cache() {
  static std::map<int, std::vector<Int>> cache;
  return cache;
}
std::mutex& cyclo_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<Int> cyclotomic_poly_locked(int n) {
  auto& cache = cyclo_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> result;
  if (n == 1) {
    result = {-1, 1};  // x - 1
  } else {
    std::vector<Int> xn1(n + 1);
    xn1[0] = -1;
    xn1[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) xn1 = div_int_poly(xn1, cyclotomic_poly_locked(d));
    result = xn1;
  }
  cache[n] = result;
  return result;
}

}  // namespace

std::vector<Int> cyclotomic_poly(int n) {
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  return cyclotomic_poly_locked(n);
}

const CycCtx& cyc_ctx(int n) {
  SK_CHECK(n >= 1, "conductor must be positive");
  static std::map<int, std::unique_ptr<CycCtx>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it != registry.end()) return *it->second;

  auto ctx = std::make_unique<CycCtx>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  ctx->min_poly = cyclotomic_poly(n);
  SK_CHECK((int)ctx->min_poly.size() == ctx->phi + 1, "cyclotomic degree mismatch");

  int maxk = std::max(2 * ctx->phi - 1, n);  // powers 0 .. maxk-1 inclusive of n-1
  ctx->xpow.resize(std::max(maxk, 1));
  ctx->xpow[0].assign(ctx->phi, Rat(0));
  ctx->xpow[0][0] = 1;
  for (int k = 1; k < (int)ctx->xpow.size(); ++k) {
    std::vector<Rat> v(ctx->phi + 1, Rat(0));
    for (int i = 0; i < ctx->phi; ++i) v[i + 1] = ctx->xpow[k - 1][i];
    if (!(v[ctx->phi] == Rat(0))) {
      Rat lead = v[ctx->phi];
      for (int i = 0; i < ctx->phi; ++i) v[i] -= lead * Rat(ctx->min_poly[i]);
    }
    v.resize(ctx->phi);
    ctx->xpow[k] = std::move(v);
  }

  const CycCtx& ref = *ctx;
  registry[n] = std::move(ctx);
  return ref;
}

bool CycElem::is_zero() const {
  if (!ctx) return true;
  for (const Rat& x : a)
    if (!(x == Rat(0))) return false;
  return true;
}

bool CycElem::is_rational() const {
  if (!ctx) return true;
  for (size_t i = 1; i < a.size(); ++i)
    if (!(a[i] == Rat(0))) return false;
  return true;
}

Rat CycElem::rational_part() const { return ctx ? a[0] : Rat(0); }

CycElem CycCtx::from_rat(const Rat& r) const {
  std::vector<Rat> v(phi, Rat(0));
  v[0] = r;
  return CycElem(this, std::move(v));
}

CycElem CycCtx::zeta(int k) const {
  k %= n;
  if (k < 0) k += n;
  return CycElem(this, xpow[k]);
}

CycElem CycCtx::add(const CycElem& x, const CycElem& y) const {
  if (!x.ctx) return y;
  if (!y.ctx) return x;
  SK_CHECK(x.ctx == this && y.ctx == this, "context mismatch");
  std::vector<Rat> v(phi);
  for (int i = 0; i < phi; ++i) v[i] = x.a[i] + y.a[i];
  return CycElem(this, std::move(v));
}

CycElem CycCtx::neg(const CycElem& x) const {
  if (!x.ctx) return x;
  std::vector<Rat> v(phi);
  for (int i = 0; i < phi; ++i) v[i] = -x.a[i];
  return CycElem(this, std::move(v));
}

CycElem CycCtx::sub(const CycElem& x, const CycElem& y) const {
  return add(x, neg(y));
}

CycElem CycCtx::mul(const CycElem& x, const CycElem& y) const {
  if (!x.ctx || !y.ctx) return CycElem();
  SK_CHECK(x.ctx == this && y.ctx == this, "context mismatch");
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (int i = 0; i < phi; ++i) {
    if (x.a[i] == Rat(0)) continue;
    for (int j = 0; j < phi; ++j) {
      if (y.a[j] == Rat(0)) continue;
      conv[i + j] += x.a[i] * y.a[j];
    }
  }
  std::vector<Rat> v(phi, Rat(0));
  for (int k = 0; k < (int)conv.size(); ++k) {
    if (conv[k] == Rat(0)) continue;
    for (int i = 0; i < phi; ++i) v[i] += conv[k] * xpow[k][i];
  }
  return CycElem(this, std::move(v));
}

CycElem CycCtx::inv(const CycElem& x) const {
  SK_CHECK(x.ctx == this && !x.is_zero(), "inverting zero");
  std::vector<Rat> mp(phi + 1);
  for (int i = 0; i <= phi; ++i) mp[i] = Rat(min_poly[i]);
  Poly<Rat> A(std::vector<Rat>(x.a));
  Poly<Rat> M(std::move(mp));
  auto [g, s, t] = ext_gcd_poly(A, M);
  (void)t;
  SK_CHECK(g.degree() == 0, "element not invertible");
  Poly<Rat> r = poly_mod(s, M);
  std::vector<Rat> v(phi, Rat(0));
  for (int i = 0; i <= r.degree(); ++i) v[i] = r.c[i];
  return CycElem(this, std::move(v));
}

CycElem CycCtx::galois(const CycElem& x, int s) const {
  if (!x.ctx) return x;
  SK_CHECK(x.ctx == this, "context mismatch");
  int ss = s % n;
  if (ss < 0) ss += n;
  SK_CHECK(std::gcd(ss == 0 ? n : ss, n) == 1 || n == 1, "galois exponent not coprime");
  std::vector<Rat> v(phi, Rat(0));
  for (int i = 0; i < phi; ++i) {
    if (x.a[i] == Rat(0)) continue;
    int k = (int)(((int64_t)i * ss) % n);
    for (int j = 0; j < phi; ++j) v[j] += x.a[i] * xpow[k][j];
  }
  return CycElem(this, std::move(v));
}

CycElem CycCtx::embed(const CycElem& x) const {
  if (!x.ctx) return x;
  if (x.ctx == this) return x;
  int d = x.ctx->n;
  SK_CHECK(n % d == 0, "embed requires divisor conductor");
  int step = n / d;
  std::vector<Rat> v(phi, Rat(0));
  for (int i = 0; i < x.ctx->phi; ++i) {
    if (x.a[i] == Rat(0)) continue;
    int k = (int)(((int64_t)i * step) % n);
    for (int j = 0; j < phi; ++j) v[j] += x.a[i] * xpow[k][j];
  }
  return CycElem(this, std::move(v));
}

std::string CycCtx::to_string(const CycElem& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < phi; ++i) {
    if (x.a[i] == Rat(0)) continue;
    if (!first) os << " + ";
    os << x.a[i];
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  return os.str();
}

CycElem CycElem::operator+(const CycElem& o) const {
  const CycCtx* c = ctx ? ctx : o.ctx;
  if (!c) return CycElem();
  return c->add(*this, o);
}
CycElem CycElem::operator-(const CycElem& o) const {
  const CycCtx* c = ctx ? ctx : o.ctx;
  if (!c) return CycElem();
  return c->sub(*this, o);
}
CycElem CycElem::operator*(const CycElem& o) const {
  if (!ctx || !o.ctx) return CycElem();
  return ctx->mul(*this, o);
}
CycElem CycElem::operator/(const CycElem& o) const {
  SK_CHECK(o.ctx != nullptr, "division by context-free zero");
  CycElem oi = o.ctx->inv(o);
  if (!ctx) return CycElem();
  return ctx->mul(*this, oi);
}
bool CycElem::operator==(const CycElem& o) const {
  if (!ctx || !o.ctx) return is_zero() && o.is_zero();
  if (ctx != o.ctx) return false;
  return a == o.a;
}

}  // namespace slicekit
