#include "pfeq/elliptic.hpp"

#include "pfeq/linsolve.hpp"

namespace pfeq {

namespace {

// coefficient-wise derivative in t of a polynomial in x over Q(t)
BiPoly dt(const BiPoly& p) {
  std::vector<RatFunc> c;
  c.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).derivative());
  return BiPoly::from_coeffs(std::move(c));
}

BiPoly cubic_of(const WeierstrassModel& w) {
  return BiPoly::from_coeffs({w.d, w.c, w.b, w.a});
}

}  // namespace

RatFunc cubic_discriminant(const WeierstrassModel& w) {
  const RatFunc &a = w.a, &b = w.b, &c = w.c, &d = w.d;
  return RatFunc(18) * a * b * c * d - RatFunc(4) * b.pow(3) * d + b * b * c * c -
         RatFunc(4) * a * c.pow(3) - RatFunc(27) * a * a * d * d;
}

EllipticPF picard_fuchs(const WeierstrassModel& w) {
  if (w.a.is_zero_fn()) throw MathError("invalid model: leading coefficient a is zero");
  if (cubic_discriminant(w).is_zero_fn())
    throw MathError("invalid model: cubic discriminant vanishes identically");

  const BiPoly f = cubic_of(w);
  const BiPoly ft = dt(f);
  const BiPoly ftt = dt(ft);
  const BiPoly fx = f.derivative();
  const RatFunc half(Rational(1, 2));
  const RatFunc threehalf(Rational(3, 2));
  const RatFunc quarter3(Rational(3, 4));

  // e is linear in the unknowns (c1, c2, q0..q4); build one column per unknown
  // plus the constant part, then match x-coefficients 0..6.
  const BiPoly constant_part = -(half * (ftt * f)) + quarter3 * (ft * ft);
  std::vector<BiPoly> cols;
  cols.push_back(-(half * (ft * f)));  // c1
  cols.push_back(f * f);               // c2
  for (int j = 0; j <= 4; ++j) {
    // (3/2) f_x x^j - j f x^(j-1)
    BiPoly term = (threehalf * fx).shifted_up(j);
    if (j > 0) term -= (RatFunc(j) * f).shifted_up(j - 1);
    cols.push_back(term);
  }

  const int kMaxDeg = 6;
  for (const BiPoly& col : cols)
    if (col.degree() > kMaxDeg) throw MathError("internal: unexpected x-degree in ansatz");
  if (constant_part.degree() > kMaxDeg)
    throw MathError("internal: unexpected x-degree in ansatz");

  std::vector<std::vector<RatFunc>> A(kMaxDeg + 1, std::vector<RatFunc>(cols.size()));
  std::vector<RatFunc> rhs(kMaxDeg + 1);
  for (int i = 0; i <= kMaxDeg; ++i) {
    for (size_t j = 0; j < cols.size(); ++j) A[i][j] = cols[j].coeff(i);
    rhs[i] = -constant_part.coeff(i);
  }

  auto sol = solve_linear(A, rhs);
  if (!sol.consistent) throw MathError("no Picard-Fuchs equation of this shape");

  EllipticPF out;
  out.c1 = sol.solution[0];
  out.c2 = sol.solution[1];
  out.q.assign(sol.solution.begin() + 2, sol.solution.end());
  out.degenerate = sol.underdetermined;
  out.rank = sol.rank;

  // back-substitution: e must vanish identically in (x, t)
  BiPoly e = constant_part;
  for (size_t j = 0; j < cols.size(); ++j) e += sol.solution[j] * cols[j];
  if (!e.is_zero_poly()) throw MathError("internal: certificate identity failed");
  return out;
}

WeierstrassModel twist_weierstrass(const WeierstrassModel& w, const RatFunc& u) {
  if (u.is_zero_fn()) throw MathError("twist by the zero function");
  return WeierstrassModel{w.a, w.b * u, w.c * u * u, w.d * u.pow(3)};
}

LinearODE to_ode(const EllipticPF& pf, std::string var) {
  return make_ode({pf.c2, pf.c1}, std::move(var));
}

}  // namespace pfeq
