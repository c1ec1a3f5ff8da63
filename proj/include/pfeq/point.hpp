#pragma once

#include <string>
#include <utility>

#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Integer squarefree part of a rational: r = (s)^2 * sf with sf a squarefree integer
// divided by nothing (sf integer, s rational).
inline void rational_squarefree(const Rational& r, Rational& s, long& sf) {
  if (sgn(r) == 0) {
    s = 0;
    sf = 0;
    return;
  }
  Int m(r.get_num() * r.get_den());
  Int sq, f;
  squarefree_decompose(m, sq, f);
  s = Rational(sq, r.get_den());
  s.canonicalize();
  sf = f.get_si();
}

inline bool is_irreducible_quadratic(const Poly& m) {
  if (m.degree() != 2) return false;
  Rational disc(m.coeff(1) * m.coeff(1) - 4 * m.coeff(2) * m.coeff(0));
  Rational s;
  long sf;
  rational_squarefree(disc, s, sf);
  return sf != 1 && sf != 0;  // disc a rational square (or zero) means reducible
}

// Root (-B + sqrt(disc)) / (2A) of an irreducible quadratic, with the + branch
// of the squarefree-normalized radical as the canonical generator.
inline QuadExt quadratic_root(const Poly& m) {
  if (!is_irreducible_quadratic(m))
    throw MathError("quadratic_root: polynomial is not an irreducible quadratic");
  Rational A = m.coeff(2), B = m.coeff(1), C = m.coeff(0);
  Rational disc(B * B - 4 * A * C);
  Rational s;
  long sf;
  rational_squarefree(disc, s, sf);
  return QuadExt(Rational(-B / (2 * A)), Rational(s / (2 * A)), sf);
}

// Primitive integer minimal polynomial of a quadratic irrationality, leading > 0.
inline Poly minimal_polynomial(const QuadExt& v) {
  if (v.is_rational()) {
    // x - v, cleared to integers
    Rational a = v.a;
    Poly p = Poly::from_coeffs({Rational(-a.get_num()), Rational(a.get_den())});
    return p;
  }
  // x^2 - tr x + norm
  Rational tr = v.trace(), nm = v.norm();
  Int l = lcm(lcm(tr.get_den(), nm.get_den()), Int(1));
  Rational L(l);
  Poly p = Poly::from_coeffs({Rational(nm * L), Rational(-tr * L), L});
  // strip integer content
  Int g = gcd(gcd(p.coeff(0).get_num(), p.coeff(1).get_num()), p.coeff(2).get_num());
  if (sgn(g) != 0) {
    Rational gi(g);
    return p.scaled_by_inverse(gi);
  }
  return p;
}

// A point of P^1 over Q-bar of degree <= 2: rational, quadratic irrational, or infinity.
struct Point {
  enum class Kind { Rational, Algebraic, Infinity };
  Kind kind = Kind::Rational;
  Rational r;   // Kind::Rational
  QuadExt alg;  // Kind::Algebraic

  Point() : r(0) {}
  static Point finite(Rational v) {
    Point p;
    p.kind = Kind::Rational;
    p.r = std::move(v);
    return p;
  }
  static Point algebraic(QuadExt v) {
    if (v.is_rational()) return finite(v.a);
    Point p;
    p.kind = Kind::Algebraic;
    p.alg = std::move(v);
    return p;
  }
  static Point from_minpoly(const Poly& m) { return algebraic(quadratic_root(m)); }
  static Point infinity() {
    Point p;
    p.kind = Kind::Infinity;
    return p;
  }

  bool is_infinity() const { return kind == Kind::Infinity; }
  bool is_rational() const { return kind == Kind::Rational; }
  bool is_algebraic() const { return kind == Kind::Algebraic; }

  Poly minpoly() const {
    if (kind != Kind::Algebraic) throw MathError("minpoly: point is not algebraic");
    return minimal_polynomial(alg);
  }

  friend bool operator==(const Point& p, const Point& q) {
    if (p.kind != q.kind) return false;
    switch (p.kind) {
      case Kind::Rational: return p.r == q.r;
      case Kind::Algebraic: return p.alg == q.alg;
      case Kind::Infinity: return true;
    }
    return false;
  }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }

  // true when p and q are equal or Galois conjugate (same minimal polynomial)
  bool same_orbit(const Point& q) const {
    if (kind != q.kind) return false;
    if (kind == Kind::Algebraic) return alg == q.alg || alg == q.alg.conj();
    return *this == q;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Rational: return r.get_str();
      case Kind::Algebraic: return quadext_str(alg);
      case Kind::Infinity: return "inf";
    }
    return "?";
  }
};

struct MarkedPoint {
  Point location;
  int index = 1;  // Schwarzian / ellipticity index, >= 1
};

}  // namespace pfeq
