#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "slicekit/families.hpp"
#include "slicekit/util.hpp"

namespace slicekit {

std::vector<int> odd_continued_fraction(int p, int q) {
  SK_CHECK(p > q && q >= 1, "continued fraction needs 0 < q < p");
  std::vector<int> cf;
  while (q > 0) {
    cf.push_back(p / q);
    int r = p % q;
    p = q;
    q = r;
  }
  if (cf.size() % 2 == 0) {
    // the final Euclid quotient of a reduced fraction with q >= 2 is >= 2
    --cf.back();
    cf.push_back(1);
  }
  return cf;
}

LinkDiagram rational_diagram(int p, int q) {
  std::vector<int> cf = odd_continued_fraction(p, q);
  std::vector<int> w;
  for (size_t i = 0; i < cf.size(); ++i)
    for (int k = 0; k < cf[i]; ++k) w.push_back(i % 2 == 0 ? 2 : -1);
  return plat_diagram(4, w, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
}

LinkDiagram pretzel_diagram(int a, int b, int c) {
  int t[3] = {a, b, c};
  std::vector<int> w;
  for (int i = 0; i < 3; ++i) {
    SK_CHECK(t[i] != 0, "pretzel twist counts must be nonzero");
    for (int k = 0; k < std::abs(t[i]); ++k)
      w.push_back(t[i] > 0 ? 2 * i + 1 : -(2 * i + 1));
  }
  // strands 1..6; the tangles twist pairs (1,2), (3,4), (5,6), and the caps
  // chain them left to right with an outer return arc joining 6 back to 1
  std::vector<std::pair<int, int>> caps = {{2, 3}, {4, 5}, {1, 6}};
  return plat_diagram(6, w, caps, caps);
}

LinkDiagram torus_diagram(int p, int q) {
  SK_CHECK(p >= 2 && q >= 2, "torus parameters must be >= 2");
  std::vector<int> w;
  for (int rep = 0; rep < q; ++rep)
    for (int k = 1; k < p; ++k) w.push_back(k);
  return braid_closure(p, w);
}

namespace {

int mod_inverse(int q, int p) {
  // extended Euclid; p > q >= 1 coprime
  int r0 = p, r1 = q, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int a = r0 / r1;
    int r2 = r0 - a * r1;
    int s2 = s0 - a * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  SK_CHECK(r0 == 1, "mod_inverse needs coprime arguments");
  return ((s0 % p) + p) % p;
}

// largest fraction numerator with continued-fraction term sum s is the
// Fibonacci-like continuant of all ones
int continuant_bound(int s) {
  int a = 1, b = 1;
  for (int i = 0; i < s; ++i) {
    int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

using Triple = std::array<int, 3>;

// orbit of a pretzel under cyclic rotation, reversal, and mirror image
std::vector<Triple> pretzel_orbit(const Triple& t) {
  std::vector<Triple> orb;
  for (int m = 0; m < 2; ++m) {
    Triple u = t;
    if (m) for (int& x : u) x = -x;
    for (int r = 0; r < 3; ++r) {
      Triple v = {u[(0 + r) % 3], u[(1 + r) % 3], u[(2 + r) % 3]};
      orb.push_back(v);
      std::swap(v[0], v[2]);
      orb.push_back(v);
    }
  }
  return orb;
}

bool pretzel_canonical(const Triple& t) {
  auto key = [](const Triple& u) {
    int neg = (u[0] < 0) + (u[1] < 0) + (u[2] < 0);
    return std::make_tuple(neg, u[0], u[1], u[2]);
  };
  for (const Triple& u : pretzel_orbit(t))
    if (key(u) < key(t)) return false;
  return true;
}

std::string pretzel_name(const Triple& t) {
  std::string s = "P";
  for (int i = 0; i < 3; ++i) {
    if (i) s += '_';
    s += std::to_string(t[i]);
  }
  return s;
}

}  // namespace

std::vector<NamedDiagram> knot_table(int max_c) {
  std::vector<NamedDiagram> out;

  // rational knots: p odd (even p gives two-component links), one q per
  // class {q, q^-1 mod p, p - q, p - q^-1} (same knot up to mirror image)
  int pmax = continuant_bound(max_c);
  for (int p = 3; p <= pmax; p += 2) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      int inv = mod_inverse(q, p);
      if (q > inv || q > p - q || q > p - inv) continue;
      std::vector<int> cf = odd_continued_fraction(p, q);
      int c = std::accumulate(cf.begin(), cf.end(), 0);
      if (c < 3 || c > max_c) continue;
      out.push_back({"S" + std::to_string(p) + "_" + std::to_string(q),
                     rational_diagram(p, q)});
    }
  }

  // pretzels: odd twist counts of magnitude >= 3 (a +-1 tangle collapses the
  // pretzel into the rational family), one representative per dihedral +
  // mirror class
  for (int a = 3; a <= max_c - 6; a += 2)
    for (int b = 3; a + b <= max_c - 3; b += 2)
      for (int c = 3; a + b + c <= max_c; c += 2)
        for (int signs = 0; signs < 8; ++signs) {
          Triple t = {signs & 1 ? -a : a, signs & 2 ? -b : b,
                      signs & 4 ? -c : c};
          if (!pretzel_canonical(t)) continue;
          out.push_back({pretzel_name(t), pretzel_diagram(t[0], t[1], t[2])});
        }

  // torus knots of braid index >= 3 (index 2 already appears as S(n,1));
  // the braid diagram has q(p-1) crossings, at least (p+1)(p-1)
  for (int p = 3; (p + 1) * (p - 1) <= max_c; ++p)
    for (int q = p + 1; q * (p - 1) <= max_c; ++q) {
      if (std::gcd(p, q) != 1) continue;
      out.push_back({"T" + std::to_string(p) + "_" + std::to_string(q),
                     torus_diagram(p, q)});
    }

  std::sort(out.begin(), out.end(),
            [](const NamedDiagram& x, const NamedDiagram& y) {
              if (x.diagram.c() != y.diagram.c()) return x.diagram.c() < y.diagram.c();
              return x.name < y.name;
            });
  return out;
}

}  // namespace slicekit
