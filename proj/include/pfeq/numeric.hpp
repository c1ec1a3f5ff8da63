#pragma once

#include <string>
#include <vector>

#include "pfeq/twist.hpp"

namespace pfeq {

struct NumericOptions {
  long digits = 50;        // working precision, decimal digits
  double fd_step = 1e-5;   // finite-difference step for the lambda-derivatives
  double path_ratio = 0.2; // step length as a fraction of the local safe radius
  int series_order = 0;    // Taylor order per step; 0 picks one from `digits`
};

struct NumericSample {
  Rational lambda;
  double rel_residual = 0.0;
  double period_magnitude = 0.0;
  bool pass = false;
};

struct NumericReport {
  bool pass = true;
  double max_rel_residual = 0.0;
  std::vector<NumericSample> samples;
  std::string message;
};

// Validates the twist operator against a numerically computed period: continues
// the base equation y'' + c1 y' + c2 y = 0 around a rectangle enclosing 0 and
// lambda, picks the monodromy-invariant solution G, integrates
// (t(t-lambda))^(-1/2) G(t) dt along the loop, and tests
// sum_n ctilde_n(lambda) u^(n)(lambda) = 0 with finite-difference derivatives.
NumericReport numeric_check(const TwistPF& tp, const RatFunc& c1, const RatFunc& c2,
                            const std::vector<Rational>& lambdas, double tol,
                            const NumericOptions& opt = {});

}  // namespace pfeq
