#include "slicekit/multivar.hpp"

#include <algorithm>
#include <sstream>

namespace slicekit {

static void charge(OpBudget& budget, uint64_t n) {
  if (!budget.take(n)) throw budget_error("multivariable polynomial budget exhausted");
}

MLaurent ml_zero(int nvars) {
  MLaurent r;
  r.nvars = nvars;
  return r;
}

MLaurent ml_const(int nvars, const Int& c) {
  MLaurent r;
  r.nvars = nvars;
  if (c != 0) r.t[std::vector<int>(nvars, 0)] = c;
  return r;
}

MLaurent ml_monomial(int nvars, int var, int exp, const Int& c) {
  SK_CHECK(var >= 0 && var < nvars, "monomial variable out of range");
  MLaurent r;
  r.nvars = nvars;
  if (c != 0) {
    std::vector<int> e(nvars, 0);
    e[var] = exp;
    r.t[std::move(e)] = c;
  }
  return r;
}

MLaurent add(const MLaurent& a, const MLaurent& b) {
  SK_CHECK(a.nvars == b.nvars, "mixed variable counts");
  MLaurent r = a;
  for (const auto& [e, c] : b.t) {
    Int& v = r.t[e];
    v += c;
    if (v == 0) r.t.erase(e);
  }
  return r;
}

MLaurent neg(const MLaurent& a) {
  MLaurent r = a;
  for (auto& [e, c] : r.t) c = -c;
  return r;
}

MLaurent sub(const MLaurent& a, const MLaurent& b) { return add(a, neg(b)); }

MLaurent mul(const MLaurent& a, const MLaurent& b, OpBudget* budget) {
  SK_CHECK(a.nvars == b.nvars, "mixed variable counts");
  if (budget) charge(*budget, a.t.size() * b.t.size() + 1);
  MLaurent r;
  r.nvars = a.nvars;
  std::vector<int> e(a.nvars);
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t) {
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      Int& v = r.t[e];
      v += ca * cb;
      if (v == 0) r.t.erase(e);
    }
  return r;
}

Int eval_all(const MLaurent& a, const Int& x) {
  SK_CHECK(x == 1 || x == -1, "eval_all only supports units");
  Int acc = 0;
  for (const auto& [e, c] : a.t) {
    long long s = 0;
    for (int v : e) s += v;
    acc += (x == 1 || s % 2 == 0) ? c : -c;
  }
  return acc;
}

MLaurent bar(const MLaurent& a) {
  MLaurent r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.t) {
    std::vector<int> f(e.size());
    for (size_t i = 0; i < e.size(); ++i) f[i] = -e[i];
    r.t[std::move(f)] = c;
  }
  return r;
}

MLaurent strip_units(const MLaurent& a) {
  if (a.is_zero()) return a;
  std::vector<int> lo = a.t.begin()->first;
  for (const auto& [e, c] : a.t)
    for (size_t i = 0; i < e.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  MLaurent r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.t) {
    std::vector<int> f(e.size());
    for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] - lo[i];
    r.t[std::move(f)] = c;
  }
  return r;
}

MLaurent ml_normalized(const MLaurent& a) {
  MLaurent r = strip_units(a);
  if (r.is_zero()) return r;
  Int g = 0;
  for (const auto& [e, c] : r.t) g = gcd_int(g, c);
  if (r.t.rbegin()->second < 0) g = -g;
  for (auto& [e, c] : r.t) c /= g;
  return r;
}

bool is_associate(const MLaurent& a, const MLaurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  MLaurent sa = strip_units(a), sb = strip_units(b);
  if (sa == sb) return true;
  return sa == neg(sb);
}

// exponentwise divisibility of the leading (lex-greatest) term
static bool monomial_divides(const std::vector<int>& den, const std::vector<int>& num) {
  for (size_t i = 0; i < den.size(); ++i)
    if (num[i] < den[i]) return false;
  return true;
}

std::optional<MLaurent> divide_exact(const MLaurent& a, const MLaurent& b) {
  SK_CHECK(!b.is_zero(), "multivariable division by zero");
  SK_CHECK(a.nvars == b.nvars, "mixed variable counts");
  MLaurent rem = strip_units(a);
  const MLaurent den = strip_units(b);
  // quotient of the stripped parts, then restore the unit difference
  std::vector<int> ulo(a.nvars, 0);
  if (!a.is_zero()) {
    ulo = a.t.begin()->first;
    for (const auto& [e, c] : a.t)
      for (int i = 0; i < a.nvars; ++i) ulo[i] = std::min(ulo[i], e[i]);
    std::vector<int> blo = b.t.begin()->first;
    for (const auto& [e, c] : b.t)
      for (int i = 0; i < b.nvars; ++i) blo[i] = std::min(blo[i], e[i]);
    for (int i = 0; i < a.nvars; ++i) ulo[i] -= blo[i];
  }
  MLaurent q;
  q.nvars = a.nvars;
  const auto& dlead = *den.t.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.t.rbegin();
    if (!monomial_divides(dlead.first, rlead.first)) return std::nullopt;
    if (rlead.second % dlead.second != 0) return std::nullopt;
    std::vector<int> e(rem.nvars);
    for (int i = 0; i < rem.nvars; ++i) e[i] = rlead.first[i] - dlead.first[i];
    Int c = rlead.second / dlead.second;
    MLaurent term;
    term.nvars = rem.nvars;
    term.t[e] = c;
    q.t[std::move(e)] = c;
    rem = sub(rem, mul(term, den));
  }
  if (!q.is_zero()) {
    MLaurent shifted;
    shifted.nvars = q.nvars;
    for (const auto& [e, c] : q.t) {
      std::vector<int> f(e.size());
      for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] + ulo[i];
      shifted.t[std::move(f)] = c;
    }
    q = std::move(shifted);
  }
  return q;
}

static int degree_in(const MLaurent& a, int v) {
  int d = 0;
  for (const auto& [e, c] : a.t) d = std::max(d, e[v]);
  return d;
}

// coefficient of x_v^k, as a polynomial with exponent 0 in variable v
static MLaurent coeff_in(const MLaurent& a, int v, int k) {
  MLaurent r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.t)
    if (e[v] == k) {
      std::vector<int> f = e;
      f[v] = 0;
      r.t[std::move(f)] = c;
    }
  return r;
}

static MLaurent shift_var(const MLaurent& a, int v, int k) {
  MLaurent r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.t) {
    std::vector<int> f = e;
    f[v] += k;
    r.t[std::move(f)] = c;
  }
  return r;
}

// pseudo-remainder of a by b in variable v (both polynomial in v)
static MLaurent prem(MLaurent a, const MLaurent& b, int v, OpBudget& budget) {
  int db = degree_in(b, v);
  MLaurent lb = coeff_in(b, v, db);
  while (!a.is_zero() && degree_in(a, v) >= db) {
    int da = degree_in(a, v);
    MLaurent la = coeff_in(a, v, da);
    a = sub(mul(a, lb, &budget), shift_var(mul(la, b, &budget), v, da - db));
    SK_CHECK(degree_in(a, v) < da || a.is_zero(), "pseudo-division stalled");
  }
  return a;
}

MLaurent gcd_ml(const MLaurent& a, const MLaurent& b, OpBudget& budget) {
  charge(budget, 1);
  MLaurent x = ml_normalized(a), y = ml_normalized(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int v = -1;
  for (int i = 0; i < x.nvars && v < 0; ++i)
    if (degree_in(x, i) > 0 || degree_in(y, i) > 0) v = i;
  if (v < 0) {
    // both are integers
    return ml_const(x.nvars, gcd_int(x.t.begin()->second, y.t.begin()->second));
  }
  // contents and primitive parts with respect to x_v
  auto content = [&](const MLaurent& p) {
    MLaurent g = ml_zero(p.nvars);
    for (int k = 0; k <= degree_in(p, v); ++k) {
      MLaurent c = coeff_in(p, v, k);
      if (!c.is_zero()) g = gcd_ml(g, c, budget);
    }
    return g;
  };
  MLaurent cx = content(x), cy = content(y);
  auto px = divide_exact(x, cx), py = divide_exact(y, cy);
  SK_CHECK(px && py, "content must divide");
  MLaurent u = *px, w = *py;
  if (degree_in(u, v) < degree_in(w, v)) std::swap(u, w);
  while (!w.is_zero()) {
    MLaurent r = prem(u, w, v, budget);
    u = std::move(w);
    if (r.is_zero()) {
      w = r;
    } else {
      MLaurent cr = content(r);
      auto pr = divide_exact(r, cr);
      SK_CHECK(pr.has_value(), "content must divide");
      w = ml_normalized(*pr);
    }
  }
  return ml_normalized(mul(gcd_ml(cx, cy, budget), u, &budget));
}

std::string to_string(const MLaurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print lex-greatest terms first
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Int ac = abs_int(c);
    bool any_var = false;
    for (int v : it->first)
      if (v != 0) any_var = true;
    if (ac != 1 || !any_var) os << ac.str();
    bool lead = ac == 1 && any_var;
    for (size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << "t" << (i + 1);
      if (it->first[i] != 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

MlRankResult ml_rank(std::vector<std::vector<MLaurent>> m, OpBudget& budget) {
  MlRankResult res;
  if (m.empty() || m[0].empty()) {
    res.last_pivot = ml_const(0, 1);
    return res;
  }
  size_t rows = m.size(), cols = m[0].size();
  int nv = m[0][0].nvars;
  // clear Laurent denominators rowwise (changes minors by monomial units only)
  for (auto& row : m) {
    std::vector<int> lo(nv, 0);
    for (const auto& x : row)
      for (const auto& [e, c] : x.t)
        for (int i = 0; i < nv; ++i) lo[i] = std::min(lo[i], e[i]);
    for (auto& x : row) {
      MLaurent y;
      y.nvars = nv;
      for (const auto& [e, c] : x.t) {
        std::vector<int> f(e.size());
        for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] - lo[i];
        y.t[std::move(f)] = c;
      }
      x = std::move(y);
    }
  }
  MLaurent prev = ml_const(nv, 1);
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    // smallest nonzero candidate as pivot
    size_t pr = rows, pc = cols;
    size_t best = SIZE_MAX;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = col; j < cols; ++j)
        if (!m[i][j].is_zero() && m[i][j].t.size() < best) {
          best = m[i][j].t.size();
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[r], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][col], m[i][pc]);
    charge(budget, 1);
    for (size_t i = r + 1; i < rows; ++i)
      for (size_t j = col + 1; j < cols; ++j) {
        MLaurent num = sub(mul(m[r][col], m[i][j], &budget),
                           mul(m[i][col], m[r][j], &budget));
        auto q = divide_exact(num, prev);
        SK_CHECK(q.has_value(), "fraction-free elimination division failed");
        m[i][j] = std::move(*q);
      }
    for (size_t i = r + 1; i < rows; ++i) m[i][col] = ml_zero(nv);
    prev = m[r][col];
    ++r;
    ++res.rank;
    res.last_pivot = prev;
  }
  if (res.rank == 0) res.last_pivot = ml_const(nv, 1);
  return res;
}

}  // namespace slicekit
