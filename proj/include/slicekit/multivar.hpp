// Sparse multivariable Laurent polynomials over the integers, with just
// enough arithmetic for Alexander-ideal computations: fraction-free
// elimination, exact division, and a primitive-PRS gcd.  All potentially
// expensive paths charge an operation budget.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/numbers.hpp"
#include "slicekit/util.hpp"

namespace slicekit {

struct MLaurent {
  int nvars = 0;
  std::map<std::vector<int>, Int> t;  // exponent vector -> nonzero coefficient

  bool is_zero() const { return t.empty(); }
  bool operator==(const MLaurent& o) const { return nvars == o.nvars && t == o.t; }
};

MLaurent ml_zero(int nvars);
MLaurent ml_const(int nvars, const Int& c);
MLaurent ml_monomial(int nvars, int var, int exp, const Int& c = Int(1));

MLaurent add(const MLaurent& a, const MLaurent& b);
MLaurent sub(const MLaurent& a, const MLaurent& b);
MLaurent neg(const MLaurent& a);
MLaurent mul(const MLaurent& a, const MLaurent& b, OpBudget* budget = nullptr);

// substitute every variable by the same integer (enough for t_i = -1 checks)
Int eval_all(const MLaurent& a, const Int& x);

// bar involution t_i -> t_i^-1
MLaurent bar(const MLaurent& a);

// divide by the monomial unit t^(min exponent vector), making all exponents
// nonnegative with zero minimum per variable
MLaurent strip_units(const MLaurent& a);

// strip_units, then divide by +-content so the lex-greatest term is positive
// and the coefficients are coprime
MLaurent ml_normalized(const MLaurent& a);

// a = unit * b with unit = +- t^k?
bool is_associate(const MLaurent& a, const MLaurent& b);

// exact division; nullopt if b does not divide a
std::optional<MLaurent> divide_exact(const MLaurent& a, const MLaurent& b);

// gcd up to sign, normalized; inputs may be Laurent (units are stripped)
MLaurent gcd_ml(const MLaurent& a, const MLaurent& b, OpBudget& budget);

// e.g. "2*t1^2*t2^-1 - 3" with variables t1..tn; "0" for zero
std::string to_string(const MLaurent& a);

// Fraction-free (Bareiss) elimination over the Laurent ring: returns the
// rank and the last nonzero pivot, which is an (rank x rank) minor of the
// input up to a monomial unit and sign.
struct MlRankResult {
  int rank = 0;
  MLaurent last_pivot;
};
MlRankResult ml_rank(std::vector<std::vector<MLaurent>> m, OpBudget& budget);

}  // namespace slicekit
