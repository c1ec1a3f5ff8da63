#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfeq/rational.hpp"

namespace pfeq {

// Dense univariate polynomial over a field K, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector and degree() == -1.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long v) {  // NOLINT: implicit constants are convenient
    K k(v);
    if (!is_zero(k)) c_.push_back(std::move(k));
  }
  Polynomial(K v) {  // NOLINT
    if (!is_zero(v)) c_.push_back(std::move(v));
  }

  static Polynomial variable() {
    Polynomial p;
    p.c_ = {K(0), K(1)};
    return p;
  }

  static Polynomial from_coeffs(std::vector<K> c) {
    Polynomial p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }

  const K& coeff(int i) const {
    static const K kZero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
  }
  const std::vector<K>& coeffs() const { return c_; }

  const K& leading() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (K& x : r.c_) x = K(-x);
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), K(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = K(p.coeff(i) + q.coeff(i));
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), K(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = K(p.coeff(i) - q.coeff(i));
    r.trim();
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.c_.empty() || q.c_.empty()) return Polynomial();
    Polynomial r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, K(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
      if (is_zero(p.c_[i])) continue;
      for (size_t j = 0; j < q.c_.size(); ++j)
        r.c_[i + j] = K(r.c_[i + j] + p.c_[i] * q.c_[j]);
    }
    r.trim();
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator*(const Polynomial& p, const K& s) {
    Polynomial r(p);
    for (K& x : r.c_) x = K(x * s);
    r.trim();
    return r;
  }
  friend Polynomial operator*(const K& s, const Polynomial& p) { return p * s; }

  Polynomial scaled_by_inverse(const K& s) const {
    if (is_zero(s)) throw MathError("polynomial division by zero scalar");
    Polynomial r(*this);
    for (K& x : r.c_) x = K(x / s);
    return r;
  }

  // Multiply by x^k.
  Polynomial shifted_up(int k) const {
    if (c_.empty() || k == 0) return *this;
    Polynomial r;
    r.c_.assign(c_.size() + k, K(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
  }

  // Euclidean division: p = q*divisor + r with deg r < deg divisor.
  static void divmod(const Polynomial& p, const Polynomial& divisor, Polynomial& quot,
                     Polynomial& rem) {
    if (divisor.c_.empty()) throw MathError("polynomial division by zero");
    quot = Polynomial();
    rem = p;
    int dd = divisor.degree();
    const K& lead = divisor.leading();
    while (!rem.c_.empty() && rem.degree() >= dd) {
      int k = rem.degree() - dd;
      K f(rem.leading() / lead);
      Polynomial t;
      t.c_.assign(k + 1, K(0));
      t.c_[k] = f;
      quot += t;
      rem -= t * divisor;
    }
  }

  // Exact division; throws if the remainder is nonzero.
  friend Polynomial operator/(const Polynomial& p, const Polynomial& q) {
    Polynomial quot, rem;
    divmod(p, q, quot, rem);
    if (!rem.is_zero_poly()) throw MathError("inexact polynomial division");
    return quot;
  }

  friend Polynomial operator%(const Polynomial& p, const Polynomial& q) {
    Polynomial quot, rem;
    divmod(p, q, quot, rem);
    return rem;
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return scaled_by_inverse(leading());
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    Polynomial r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = K(c_[i] * K(static_cast<long>(i)));
    r.trim();
    return r;
  }

  template <class E>
  E eval(const E& x) const {
    E acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = E(acc * x + E(*it));
    return acc;
  }

  template <class E>
  Polynomial<E> convert() const {
    std::vector<E> c;
    c.reserve(c_.size());
    for (const K& x : c_) c.push_back(E(x));
    return Polynomial<E>::from_coeffs(std::move(c));
  }

  // p(x + c)
  Polynomial taylor_shift(const K& c) const {
    Polynomial shift = variable() + Polynomial(c);
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * shift + Polynomial(*it);
    return acc;
  }

  // p(q(x))
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
    return acc;
  }

  // x^deg * p(1/x)
  Polynomial reversed() const {
    Polynomial r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r(1L);
    Polynomial b(*this);
    while (e) {
      if (e & 1) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const Polynomial<K>& p) {
  return p.is_zero_poly();
}

// Monic gcd by the Euclidean algorithm.
template <class K>
Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  Polynomial<K> x = a, y = b;
  while (!y.is_zero_poly()) {
    Polynomial<K> r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

// Rational coefficients: primitive PRS over the integers, which avoids the
// coefficient explosion of fraction Euclid on large inputs.
inline Polynomial<Rational> gcd(const Polynomial<Rational>& a,
                                const Polynomial<Rational>& b) {
  using P = Polynomial<Rational>;
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  auto clear = [](const P& p) {
    Int l(1);
    for (const Rational& c : p.coeffs()) l = lcm(l, c.get_den());
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) out.push_back(Int(c.get_num() * (l / c.get_den())));
    return out;
  };
  auto primitive = [](std::vector<Int>& v) {
    Int g(0);
    for (const Int& c : v) g = gcd(g, c);
    if (sgn(g) > 0)
      for (Int& c : v) c /= g;
  };
  auto trim = [](std::vector<Int>& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
  };
  std::vector<Int> x = clear(a), y = clear(b);
  primitive(x);
  primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // pseudo-remainder of x by y, stripped to primitive form
    const Int& ly = y.back();
    const int dy = static_cast<int>(y.size()) - 1;
    while (static_cast<int>(x.size()) - 1 >= dy && !x.empty()) {
      int dx = static_cast<int>(x.size()) - 1;
      Int lx = x.back();
      for (Int& c : x) c *= ly;
      for (int i = 0; i <= dy; ++i) x[dx - dy + i] -= lx * y[i];
      trim(x);
    }
    primitive(x);
    std::swap(x, y);
  }
  std::vector<Rational> lifted;
  lifted.reserve(x.size());
  for (const Int& c : x) lifted.emplace_back(c);
  return P::from_coeffs(std::move(lifted)).monic();
}

template <class K>
Polynomial<K> lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return Polynomial<K>();
  Polynomial<K> g = gcd(a, b);
  return ((a * b) / g).monic();
}

}  // namespace pfeq
