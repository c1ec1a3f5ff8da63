#pragma once

#include <string>

#include "pfeq/laurent.hpp"
#include "pfeq/ode.hpp"
#include "pfeq/point.hpp"

namespace pfeq {

// Quadratic differential f(x) (dx)^2 in the named coordinate.
struct QuadDifferential {
  RatFunc f;
  std::string var;
};

// S(z) of the solution quotient of a monic order-2 operator: 4b - a^2 - 2a'.
QuadDifferential schwarzian_of_ode(const RatFunc& a, const RatFunc& b,
                                   const std::string& var);
QuadDifferential schwarzian_of_ode(const LinearODE& deg2);

// Schwarzian derivative (2 phi' phi''' - 3 phi''^2) / phi'^2 of a nonconstant map.
QuadDifferential schwarzian_of_map(const RatFunc& phi, const std::string& var);

// Change of variables old = phi(new): f(phi) phi'^2 + S(phi), as a differential
// in the new coordinate.
QuadDifferential transport(const QuadDifferential& sigma, const RatFunc& phi,
                           const std::string& new_var);

// 1 minus the coefficient of (x - p)^(-2); at infinity computed in the w = 1/x
// chart where (dx)^2 picks up w^(-4). Conjugate algebraic points must give a
// rational (Galois-stable) answer.
Rational residue(const QuadDifferential& sigma, const Point& p);

// The n >= 1 with residue = 1/n^2; searched up to n = 60.
int index_at(const QuadDifferential& sigma, const Point& p);

// Image of a point under a rational map (with the usual P^1 conventions).
Point apply_map(const RatFunc& phi, const Point& p);

// Ramification order of phi at p: order of vanishing of phi - phi(p).
int ramification_order(const RatFunc& phi, const Point& p);

// Checks ramification order n at the preimage and the n^2 scaling of the
// Schwarzian residue under transport along phi.
bool residue_scaling_check(const QuadDifferential& sigma, const RatFunc& phi,
                           const std::string& new_var, const Point& preimage, int n);

// The unique differential with prescribed indices at 0, 1, infinity and no
// other singularities: a/t^2 + b/(t-1)^2 + c/t + d/(t-1) with c + d = 0.
QuadDifferential sigma_from_indices(int n0, int n1, int ninf,
                                    const std::string& var = "t");

}  // namespace pfeq
