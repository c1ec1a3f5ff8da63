#pragma once

#include <utility>

#include "pfeq/polynomial.hpp"

namespace pfeq {

// Reduced fraction of polynomials over a field K: gcd(num, den) = 1, den monic.
template <class K>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1L) {}
  RationalFunction(long v) : num_(v), den_(1L) {}  // NOLINT
  RationalFunction(K v) : num_(std::move(v)), den_(1L) {}  // NOLINT
  RationalFunction(Polynomial<K> p) : num_(std::move(p)), den_(1L) {}  // NOLINT

  RationalFunction(Polynomial<K> num, Polynomial<K> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_poly()) throw MathError("rational function with zero denominator");
    reduce();
  }

  static RationalFunction variable() { return RationalFunction(Polynomial<K>::variable()); }

  const Polynomial<K>& num() const { return num_; }
  const Polynomial<K>& den() const { return den_; }
  bool is_zero_fn() const { return num_.is_zero_poly(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  K constant_value() const {
    if (!is_constant()) throw MathError("rational function is not constant");
    return num_.is_zero_poly() ? K(0) : num_.coeff(0);
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero_fn()) throw MathError("division by zero rational function");
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
  }

  RationalFunction& operator+=(const RationalFunction& g) { return *this = *this + g; }
  RationalFunction& operator-=(const RationalFunction& g) { return *this = *this - g; }
  RationalFunction& operator*=(const RationalFunction& g) { return *this = *this * g; }
  RationalFunction& operator/=(const RationalFunction& g) { return *this = *this / g; }

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    // reduced canonical forms: cross-multiplication equality collapses to this
    return f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
    return !(f == g);
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  template <class E>
  E eval(const E& x) const {
    E d = den_.template eval<E>(x);
    if (is_zero(d)) throw MathError("evaluation at a pole");
    return E(num_.template eval<E>(x) / d);
  }

  // f(g(x)) for a rational inner function g
  RationalFunction compose(const RationalFunction& g) const {
    int dn = std::max(num_.degree(), 0), dd = std::max(den_.degree(), 0);
    int d = std::max(dn, dd);
    // clear g-denominators: f(g) = sum n_i g^i / sum d_i g^i scaled by gden^d
    Polynomial<K> gn = g.num_, gd = g.den_;
    Polynomial<K> n_acc, d_acc;
    Polynomial<K> gnp(1L);  // gn^i, built up
    std::vector<Polynomial<K>> gn_pows(d + 1), gd_pows(d + 1);
    gn_pows[0] = Polynomial<K>(1L);
    gd_pows[0] = Polynomial<K>(1L);
    for (int i = 1; i <= d; ++i) {
      gn_pows[i] = gn_pows[i - 1] * gn;
      gd_pows[i] = gd_pows[i - 1] * gd;
    }
    for (int i = 0; i <= d; ++i) {
      Polynomial<K> t = gn_pows[i] * gd_pows[d - i];
      if (i <= num_.degree()) n_acc += Polynomial<K>(num_.coeff(i)) * t;
      if (i <= den_.degree()) d_acc += Polynomial<K>(den_.coeff(i)) * t;
    }
    if (d_acc.is_zero_poly())
      throw MathError("composition lands identically in a pole");
    return RationalFunction(n_acc, d_acc);
  }

  RationalFunction pow(int e) const {
    if (e < 0) return RationalFunction(1L) / pow(-e);
    RationalFunction r(1L), b(*this);
    unsigned u = static_cast<unsigned>(e);
    while (u) {
      if (u & 1) r *= b;
      if (u >>= 1) b *= b;
    }
    return r;
  }

  template <class E>
  RationalFunction<E> convert() const {
    return RationalFunction<E>(num_.template convert<E>(), den_.template convert<E>());
  }

  // order of vanishing at a finite point (negative for a pole)
  template <class E>
  int valuation_at(const E& c) const {
    auto count = [&](const Polynomial<K>& p) {
      if (p.is_zero_poly()) throw MathError("valuation of zero");
      Polynomial<E> q = p.template convert<E>();
      Polynomial<E> lin = Polynomial<E>::variable() - Polynomial<E>(c);
      int v = 0;
      while (true) {
        Polynomial<E> quot, rem;
        Polynomial<E>::divmod(q, lin, quot, rem);
        if (!rem.is_zero_poly()) break;
        q = quot;
        ++v;
      }
      return v;
    };
    return count(num_) - count(den_);
  }

 private:
  void reduce() {
    if (num_.is_zero_poly()) {
      den_ = Polynomial<K>(1L);
      return;
    }
    Polynomial<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K lead = den_.leading();
    num_ = num_.scaled_by_inverse(lead);
    den_ = den_.scaled_by_inverse(lead);
  }

  Polynomial<K> num_, den_;
};

template <class K>
bool is_zero(const RationalFunction<K>& f) {
  return f.is_zero_fn();
}

using Poly = Polynomial<Rational>;
using RatFunc = RationalFunction<Rational>;
// polynomials / rational functions in an outer variable over an inner function field,
// e.g. Q(lambda)[t] and Q(lambda)(t)
using BiPoly = Polynomial<RatFunc>;
using BiRatFunc = RationalFunction<RatFunc>;

namespace detail {

// bivariate helpers on ascending vectors of Q[lambda]-coefficients; used to
// keep BiPoly gcds primitive (plain Euclid over Q(lambda) blows up)
inline Poly bivar_content(const std::vector<Poly>& c) {
  Poly g;
  for (const Poly& p : c) g = gcd(g, p);
  return g;
}

inline void bivar_trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero_poly()) c.pop_back();
}

inline void bivar_primitive(std::vector<Poly>& c) {
  Poly g = bivar_content(c);
  if (g.is_zero_poly() || g.degree() == 0) return;
  for (Poly& p : c) p = p / g;
}

// pseudo-remainder of a by b: lc(b)^(da-db+1) * a reduced mod b
inline std::vector<Poly> bivar_prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Poly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    Poly la = a.back();
    for (Poly& p : a) p = p * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    bivar_trim(a);
    if (static_cast<int>(a.size()) - 1 == da) break;  // cannot happen; guards looping
  }
  return a;
}

}  // namespace detail

// primitive-PRS gcd for polynomials in t over Q(lambda): clears inner
// denominators, works in Q[lambda][t], and returns a monic result
inline BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  auto clear = [](const BiPoly& p) {
    Poly den(Rational(1));
    for (const RatFunc& c : p.coeffs()) den = lcm(den, c.den());
    std::vector<Poly> out;
    out.reserve(p.coeffs().size());
    for (const RatFunc& c : p.coeffs()) out.push_back(c.num() * (den / c.den()));
    return out;
  };
  std::vector<Poly> x = clear(a), y = clear(b);
  detail::bivar_primitive(x);
  detail::bivar_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Poly> r = detail::bivar_prem(x, y);
    detail::bivar_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<RatFunc> lifted;
  lifted.reserve(x.size());
  for (const Poly& p : x) lifted.emplace_back(p);
  return BiPoly::from_coeffs(std::move(lifted)).monic();
}

}  // namespace pfeq
