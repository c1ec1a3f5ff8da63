#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pfeq {

using Int = mpz_class;
using Rational = mpq_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw MathError("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rational_str(const Rational& x) { return x.get_str(); }

// n = square * sf with sf squarefree; sign of n goes to sf.
inline void squarefree_decompose(const Int& n, Int& square, Int& sf) {
  square = 1;
  sf = n;
  if (sgn(n) == 0) return;
  Int m = abs(n);
  Int rem = 1;
  for (Int p = 2; p * p <= m; ++p) {
    Int p2 = p * p;
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t())) {
      m /= p2;
      square *= p;
    }
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      rem *= p;
    }
  }
  sf = rem * m * sgn(n);
}

// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
// d is a squarefree integer, with d = 0 exactly when the value is rational.
struct QuadExt {
  Rational a, b;
  long d = 0;

  QuadExt() : a(0), b(0) {}
  QuadExt(long v) : a(v), b(0) {}  // NOLINT: implicit by design
  QuadExt(const Rational& v) : a(v), b(0) {}
  QuadExt(int v) : a(v), b(0) {}

  QuadExt(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)) {
    if (sgn(b) == 0 || d_ == 0) {
      b = 0;
      d = 0;
      return;
    }
    Int sq, sf;
    squarefree_decompose(Int(d_), sq, sf);
    b *= Rational(sq);
    if (sf == 1) {  // sqrt(1): collapses to a rational
      a += b;
      b = 0;
      d = 0;
      return;
    }
    d = sf.get_si();
  }

  bool is_rational() const { return sgn(b) == 0; }
  QuadExt conj() const { return QuadExt(a, -b, d); }
  Rational norm() const { return Rational(a * a - Rational(d) * b * b); }
  Rational trace() const { return Rational(2 * a); }

  // rational part accessor with a check, used where Galois stability is asserted
  Rational rational_value() const {
    if (!is_rational()) throw MathError("QuadExt: value is not rational");
    return a;
  }
};

inline bool compatible(const QuadExt& x, const QuadExt& y) {
  return x.d == 0 || y.d == 0 || x.d == y.d;
}

inline long join_d(const QuadExt& x, const QuadExt& y) {
  if (!compatible(x, y)) throw MathError("QuadExt: mixing different quadratic fields");
  return x.d != 0 ? x.d : y.d;
}

inline bool is_zero(const QuadExt& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

inline QuadExt operator-(const QuadExt& x) { return QuadExt(Rational(-x.a), Rational(-x.b), x.d); }

inline QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  long d = join_d(x, y);
  return QuadExt(Rational(x.a + y.a), Rational(x.b + y.b), d);
}

inline QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

inline QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  long d = join_d(x, y);
  return QuadExt(Rational(x.a * y.a + Rational(d) * x.b * y.b),
                 Rational(x.a * y.b + x.b * y.a), d);
}

inline QuadExt inverse(const QuadExt& x) {
  if (is_zero(x)) throw MathError("QuadExt: division by zero");
  Rational n = x.norm();
  // norm vanishes only at zero since d is not a perfect square
  return QuadExt(Rational(x.a / n), Rational(-x.b / n), x.d);
}

inline QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * inverse(y); }

inline bool operator==(const QuadExt& x, const QuadExt& y) {
  if (!compatible(x, y)) return false;
  return x.a == y.a && x.b == y.b;
}
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

inline QuadExt& operator+=(QuadExt& x, const QuadExt& y) { return x = x + y; }
inline QuadExt& operator-=(QuadExt& x, const QuadExt& y) { return x = x - y; }
inline QuadExt& operator*=(QuadExt& x, const QuadExt& y) { return x = x * y; }
inline QuadExt& operator/=(QuadExt& x, const QuadExt& y) { return x = x / y; }

inline QuadExt pow(QuadExt base, unsigned long e) {
  QuadExt r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string quadext_str(const QuadExt& x) {
  if (x.is_rational()) return x.a.get_str();
  std::string s = x.a.get_str();
  s += (sgn(x.b) < 0) ? " - " : " + ";
  Rational ab(abs(x.b));
  if (ab != 1) {
    s += ab.get_str();
    s += "*";
  }
  s += "sqrt(" + std::to_string(x.d) + ")";
  return s;
}

}  // namespace pfeq
