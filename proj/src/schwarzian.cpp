#include "pfeq/schwarzian.hpp"

namespace pfeq {

QuadDifferential schwarzian_of_ode(const RatFunc& a, const RatFunc& b,
                                   const std::string& var) {
  return {RatFunc(4) * b - a * a - RatFunc(2) * a.derivative(), var};
}

QuadDifferential schwarzian_of_ode(const LinearODE& deg2) {
  if (deg2.order() != 2) throw MathError("schwarzian_of_ode expects an order-2 operator");
  return schwarzian_of_ode(deg2.a[1], deg2.a[0], deg2.var);
}

QuadDifferential schwarzian_of_map(const RatFunc& phi, const std::string& var) {
  RatFunc d1 = phi.derivative();
  if (d1.is_zero_fn()) throw MathError("Schwarzian of a constant map");
  RatFunc d2 = d1.derivative();
  RatFunc d3 = d2.derivative();
  return {(RatFunc(2) * d1 * d3 - RatFunc(3) * d2 * d2) / (d1 * d1), var};
}

QuadDifferential transport(const QuadDifferential& sigma, const RatFunc& phi,
                           const std::string& new_var) {
  RatFunc d1 = phi.derivative();
  if (d1.is_zero_fn()) throw MathError("transport along a constant map");
  RatFunc pulled = sigma.f.compose(phi) * d1 * d1;
  return {pulled + schwarzian_of_map(phi, new_var).f, new_var};
}

Rational residue(const QuadDifferential& sigma, const Point& p) {
  if (sigma.f.is_zero_fn()) return Rational(1);
  // pole order check, then the (x-p)^(-2) coefficient; at infinity both happen
  // in the w = 1/x chart against f(1/w)/w^4
  if (p.is_infinity()) {
    LaurentSeries<Rational> g = laurent_at_infinity(sigma.f, 2);
    for (int e = g.lo; e < 2; ++e)
      if (!is_zero(g.coefficient(e)))
        throw MathError("not a sigma-type singularity (pole of order > 2)");
    return Rational(1) - g.coefficient(2);
  }
  QuadExt c2(0);
  if (p.is_rational()) {
    LaurentSeries<Rational> s = laurent_at(sigma.f, p.r, -2);
    if (s.lo < -2 && !s.is_identically_zero())
      throw MathError("not a sigma-type singularity (pole of order > 2)");
    c2 = QuadExt(s.coefficient(-2));
  } else {
    LaurentSeries<QuadExt> s = laurent_at(sigma.f, p.alg, -2);
    if (s.lo < -2 && !s.is_identically_zero())
      throw MathError("not a sigma-type singularity (pole of order > 2)");
    c2 = s.coefficient(-2);
  }
  if (!c2.is_rational())
    throw MathError("residue at algebraic point is not Galois-stable");
  return Rational(1) - c2.a;
}

int index_at(const QuadDifferential& sigma, const Point& p) {
  Rational r = residue(sigma, p);
  for (int n = 1; n <= 60; ++n)
    if (r == Rational(1, n * n)) return n;
  throw MathError("no integer index: residue is not 1/n^2 for n <= 60");
}

Point apply_map(const RatFunc& phi, const Point& p) {
  switch (p.kind) {
    case Point::Kind::Rational: {
      Rational dv = phi.den().eval(p.r);
      if (is_zero(dv)) return Point::infinity();
      return Point::finite(phi.num().eval(p.r) / dv);
    }
    case Point::Kind::Algebraic: {
      QuadExt dv = phi.den().convert<QuadExt>().eval(p.alg);
      if (is_zero(dv)) return Point::infinity();
      return Point::algebraic(phi.num().convert<QuadExt>().eval(p.alg) / dv);
    }
    case Point::Kind::Infinity: {
      int dn = phi.num().degree(), dd = phi.den().degree();
      if (dn > dd) return Point::infinity();
      if (dn < dd) return Point::finite(Rational(0));
      return Point::finite(phi.num().leading() / phi.den().leading());
    }
  }
  throw MathError("apply_map: bad point");
}

int ramification_order(const RatFunc& phi, const Point& p) {
  Point image = apply_map(phi, p);
  RatFunc g;
  if (image.is_infinity()) {
    g = RatFunc(1) / phi;
  } else if (image.is_rational()) {
    g = phi - RatFunc(image.r);
  } else {
    // (phi - c)(phi - conj c) stays rational; the conjugate factor does not
    // vanish at p, so the valuation is the ramification order itself
    RatFunc tr(image.alg.trace()), nm(image.alg.norm());
    RatFunc h = phi * phi - tr * phi + nm;
    return valuation(h, p);
  }
  return valuation(g, p);
}

bool residue_scaling_check(const QuadDifferential& sigma, const RatFunc& phi,
                           const std::string& new_var, const Point& preimage, int n) {
  if (ramification_order(phi, preimage) != n) return false;
  Point image = apply_map(phi, preimage);
  QuadDifferential moved = transport(sigma, phi, new_var);
  return residue(moved, preimage) == Rational(n * n) * residue(sigma, image);
}

QuadDifferential sigma_from_indices(int n0, int n1, int ninf, const std::string& var) {
  if (n0 < 1 || n1 < 1 || ninf < 1) throw MathError("indices must be positive");
  auto res = [](int n) -> Rational {
    return Rational(1) - Rational(1, static_cast<long>(n) * n);
  };
  Rational a = res(n0), b = res(n1);
  Rational d = res(ninf) - a - b;
  Rational c = -d;
  RatFunc x = RatFunc::variable();
  RatFunc xm1 = x - RatFunc(1);
  RatFunc f = RatFunc(a) / (x * x) + RatFunc(b) / (xm1 * xm1) + RatFunc(c) / x +
              RatFunc(d) / xm1;
  return {f, var};
}

}  // namespace pfeq
