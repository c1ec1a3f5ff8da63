#pragma once

#include <vector>

#include "pfeq/point.hpp"
#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Finite chunk of a Laurent expansion: sum_i coef[i] * s^(lo + i), exact
// coefficients, truncated after the stored range.
template <class K>
struct LaurentSeries {
  int lo = 0;
  std::vector<K> coef;

  int hi() const { return lo + static_cast<int>(coef.size()) - 1; }
  K coefficient(int e) const {
    if (e < lo || e > hi()) return K(0);
    return coef[e - lo];
  }
  bool is_identically_zero() const {
    for (const K& c : coef)
      if (!is_zero(c)) return false;
    return true;
  }
};

namespace detail {

// power series quotient n/d to order `terms-1`, requires d[0] != 0
template <class K>
std::vector<K> series_divide(const std::vector<K>& n, const std::vector<K>& d, int terms) {
  std::vector<K> q(terms, K(0));
  for (int k = 0; k < terms; ++k) {
    K acc = (k < static_cast<int>(n.size())) ? n[k] : K(0);
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
      acc = K(acc - d[j] * q[k - j]);
    q[k] = K(acc / d[0]);
  }
  return q;
}

}  // namespace detail

// Expansion of f around the finite center c (valued in a field E containing K),
// with exact coefficients for exponents from the pole order up to `depth`.
template <class E, class K>
LaurentSeries<E> laurent_at(const RationalFunction<K>& f, const E& center, int depth) {
  if (f.is_zero_fn()) return LaurentSeries<E>{0, {}};
  Polynomial<E> n = f.num().template convert<E>().taylor_shift(center);
  Polynomial<E> d = f.den().template convert<E>().taylor_shift(center);
  int vn = 0, vd = 0;
  while (is_zero(n.coeff(vn))) ++vn;
  while (is_zero(d.coeff(vd))) ++vd;
  int lo = vn - vd;
  if (depth < lo) return LaurentSeries<E>{lo, {}};
  int terms = depth - lo + 1;
  std::vector<E> nc, dc;
  for (int i = vn; i <= n.degree(); ++i) nc.push_back(n.coeff(i));
  for (int i = vd; i <= d.degree(); ++i) dc.push_back(d.coeff(i));
  LaurentSeries<E> out;
  out.lo = lo;
  out.coef = detail::series_divide(nc, dc, terms);
  return out;
}

// Expansion of g(w) = f(1/w) around w = 0 (the chart at infinity).
template <class K>
LaurentSeries<K> laurent_at_infinity(const RationalFunction<K>& f, int depth) {
  if (f.is_zero_fn()) return LaurentSeries<K>{0, {}};
  Polynomial<K> rn = f.num().reversed();
  Polynomial<K> rd = f.den().reversed();
  int offset = f.den().degree() - f.num().degree();
  // rd(0) = leading coefficient of den, nonzero; rn(0) nonzero likewise
  LaurentSeries<K> base = laurent_at(RationalFunction<K>(rn, rd), K(0), depth - offset);
  base.lo += offset;
  return base;
}

// Laurent coefficient of (x - p)^e, with p rational, quadratic, or infinity.
// For infinity this is the coefficient of w^{-e} of f(1/w) at w=0, matching the
// convention val_infinity(x^k) = k.
inline QuadExt laurent_coefficient(const RatFunc& f, const Point& p, int e) {
  switch (p.kind) {
    case Point::Kind::Rational: {
      LaurentSeries<Rational> s = laurent_at(f, p.r, e);
      return QuadExt(s.coefficient(e));
    }
    case Point::Kind::Algebraic: {
      LaurentSeries<QuadExt> s = laurent_at(f, p.alg, e);
      return s.coefficient(e);
    }
    case Point::Kind::Infinity: {
      LaurentSeries<Rational> s = laurent_at_infinity(f, -e);
      return QuadExt(s.coefficient(-e));
    }
  }
  throw MathError("laurent_coefficient: bad point");
}

// Valuation of f at p: order of vanishing (negative for poles); at infinity the
// order of vanishing of f(1/w) at w=0.
inline int valuation(const RatFunc& f, const Point& p) {
  if (f.is_zero_fn()) throw MathError("valuation of the zero function");
  switch (p.kind) {
    case Point::Kind::Rational:
      return f.valuation_at(p.r);
    case Point::Kind::Algebraic:
      return f.valuation_at(p.alg);
    case Point::Kind::Infinity:
      return f.den().degree() - f.num().degree();
  }
  throw MathError("valuation: bad point");
}

}  // namespace pfeq
