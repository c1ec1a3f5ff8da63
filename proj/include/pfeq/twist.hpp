#pragma once

#include <string>
#include <vector>

#include "pfeq/ode.hpp"
#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Operator sum_n ctilde[n](lambda) d^n u / d lambda^n annihilating the H^2
// period of the family of quadratic twists at 0 and lambda, together with the
// intermediate data of the construction over Q(lambda)(t).
struct TwistPF {
  std::vector<RatFunc> ctilde;  // in lambda; cleared to polynomials, content-stripped
  BiRatFunc alpha, beta;        // twisted order-2 coefficients, rational in t over Q(lambda)
  BiRatFunc q;                  // certificate multiplier q0 (t-lambda)^(-m)
  int m = 0;                    // degree of the polynomial pol0
  bool degenerate = false;      // pol0 == 0 (zero operator)

  int order() const;  // index of the top nonzero coefficient
  LinearODE monic_ode(std::string lambda_var = "l") const;
};

// 2^n / (1 * 3 * ... * (2n-1)), the factor turning expansion coefficients into
// the lambda-derivative operator entries.
Rational double_factorial_scale(int n);

// Build the twist-family operator from the monic base coefficients c1, c2 in t.
// The base surface must have its twisted singular fiber at t = 0.
TwistPF twist_pf(const RatFunc& c1, const RatFunc& c2);

// Coordinate shift t -> t + s, moving the singular point s to the origin.
void shift_base(RatFunc& c1, RatFunc& c2, const Rational& s);

}  // namespace pfeq
