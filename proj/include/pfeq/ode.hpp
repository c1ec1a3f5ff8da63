#pragma once

#include <string>
#include <vector>

#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Monic linear differential operator y^(n) + a_{n-1} y^(n-1) + ... + a_0 y with
// rational-function coefficients. `raw` optionally keeps a non-normalized
// display form A_0..A_n when the operator came from one.
struct LinearODE {
  std::string var = "t";
  std::vector<RatFunc> a;    // a_0 .. a_{n-1}
  std::vector<RatFunc> raw;  // empty, or A_0 .. A_n with A_n the leading coefficient

  int order() const { return static_cast<int>(a.size()); }
};

LinearODE make_ode(std::vector<RatFunc> monic_coeffs, std::string var);

// Divide through by the leading coefficient A_n.
LinearODE normalize(std::vector<RatFunc> raw_coeffs, std::string var);
LinearODE normalize(const LinearODE& ode);

// Order-3 operator satisfied by products of solutions of the given order-2 one:
// alpha = 3a, beta = 4b + 2a^2 + a', gamma = 4ab + 2b'.
LinearODE symmetric_square(const LinearODE& deg2);

// Inverse of symmetric_square where it exists: a = alpha/3,
// b = (beta - 2a^2 - a')/4, residual = gamma - 4ab - 2b'. ok iff residual == 0.
struct Sqrt3Result {
  bool ok = false;
  RatFunc a, b;
  RatFunc residual;
};
Sqrt3Result sqrt3(const LinearODE& deg3);

// Exact Taylor coefficients around an ordinary center, valid through exponent N.
struct TruncatedSeries {
  Rational center;
  std::vector<Rational> coef;  // coef[k] multiplies (x - center)^k, k = 0..N
  int N = 0;
};

TruncatedSeries series_make(Rational center, std::vector<Rational> coef);
TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_derivative(const TruncatedSeries& s);
bool series_is_zero(const TruncatedSeries& s);

// Unique truncated solution with y^(i)(center) = initial[i]; center must be an
// ordinary point of the operator.
TruncatedSeries series_solve(const LinearODE& ode, const Rational& center, int N,
                             const std::vector<Rational>& initial);

// Operator applied to a rational function / a truncated series (through order
// N - order, using the denominator-cleared polynomial form of the operator).
RatFunc apply(const LinearODE& ode, const RatFunc& f);
TruncatedSeries apply(const LinearODE& ode, const TruncatedSeries& s);

// Denominator-cleared coefficients [A_0 .. A_n] with A_i = L a_i, A_n = L.
std::vector<Poly> polynomial_form(const LinearODE& ode);

}  // namespace pfeq
