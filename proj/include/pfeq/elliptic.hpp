#pragma once

#include <vector>

#include "pfeq/ode.hpp"
#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Weierstrass model y^2 = a x^3 + b x^2 + c x + d with coefficients in Q(t).
struct WeierstrassModel {
  RatFunc a, b, c, d;
};

// The cubic's discriminant; identically zero means the model is not an honest
// elliptic surface.
RatFunc cubic_discriminant(const WeierstrassModel& w);

// Output of the period computation: y'' + c1 y' + c2 y = 0 together with the
// certificate polynomial q(x) = q[0] + ... + q[4] x^4 witnessing exactness.
struct EllipticPF {
  RatFunc c1, c2;
  std::vector<RatFunc> q;  // q_0 .. q_4
  bool degenerate = false;  // underdetermined system; free unknowns were zeroed
  int rank = 0;
};

EllipticPF picard_fuchs(const WeierstrassModel& w);

// The model of u(t) y^2 = f(x) after X = u x, Y = u^2 y: (a, bu, cu^2, du^3).
WeierstrassModel twist_weierstrass(const WeierstrassModel& w, const RatFunc& u);

LinearODE to_ode(const EllipticPF& pf, std::string var = "t");

}  // namespace pfeq
