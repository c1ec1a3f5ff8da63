#include "pfeq/ode.hpp"

#include <algorithm>

namespace pfeq {

LinearODE make_ode(std::vector<RatFunc> monic_coeffs, std::string var) {
  if (monic_coeffs.empty()) throw MathError("operator must have order >= 1");
  LinearODE ode;
  ode.var = std::move(var);
  ode.a = std::move(monic_coeffs);
  return ode;
}

LinearODE normalize(std::vector<RatFunc> raw_coeffs, std::string var) {
  if (raw_coeffs.size() < 2) throw MathError("operator must have order >= 1");
  const RatFunc& lead = raw_coeffs.back();
  if (lead.is_zero_fn()) throw MathError("normalize: zero leading coefficient");
  LinearODE ode;
  ode.var = std::move(var);
  ode.a.reserve(raw_coeffs.size() - 1);
  for (size_t i = 0; i + 1 < raw_coeffs.size(); ++i) ode.a.push_back(raw_coeffs[i] / lead);
  ode.raw = std::move(raw_coeffs);
  return ode;
}

LinearODE normalize(const LinearODE& ode) { return ode; }

LinearODE symmetric_square(const LinearODE& deg2) {
  if (deg2.order() != 2) throw MathError("symmetric_square expects an order-2 operator");
  const RatFunc& b = deg2.a[0];
  const RatFunc& a = deg2.a[1];
  RatFunc alpha = RatFunc(3) * a;
  RatFunc beta = RatFunc(4) * b + RatFunc(2) * a * a + a.derivative();
  RatFunc gamma = RatFunc(4) * a * b + RatFunc(2) * b.derivative();
  return make_ode({gamma, beta, alpha}, deg2.var);
}

Sqrt3Result sqrt3(const LinearODE& deg3) {
  if (deg3.order() != 3) throw MathError("sqrt3 expects an order-3 operator");
  const RatFunc& gamma = deg3.a[0];
  const RatFunc& beta = deg3.a[1];
  const RatFunc& alpha = deg3.a[2];
  Sqrt3Result r;
  r.a = alpha / RatFunc(3);
  r.b = (beta - RatFunc(2) * r.a * r.a - r.a.derivative()) / RatFunc(4);
  r.residual = gamma - RatFunc(4) * r.a * r.b - RatFunc(2) * r.b.derivative();
  r.ok = r.residual.is_zero_fn();
  return r;
}

TruncatedSeries series_make(Rational center, std::vector<Rational> coef) {
  TruncatedSeries s;
  s.center = std::move(center);
  s.N = static_cast<int>(coef.size()) - 1;
  s.coef = std::move(coef);
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.center != t.center) throw MathError("series centers differ");
  TruncatedSeries r;
  r.center = s.center;
  r.N = std::min(s.N, t.N);
  r.coef.resize(r.N + 1, Rational(0));
  for (int k = 0; k <= r.N; ++k) r.coef[k] = s.coef[k] + t.coef[k];
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.center != t.center) throw MathError("series centers differ");
  TruncatedSeries r;
  r.center = s.center;
  r.N = std::min(s.N, t.N);
  r.coef.assign(r.N + 1, Rational(0));
  for (int i = 0; i <= std::min(s.N, r.N); ++i) {
    if (is_zero(s.coef[i])) continue;
    for (int j = 0; j <= t.N && i + j <= r.N; ++j)
      r.coef[i + j] += s.coef[i] * t.coef[j];
  }
  return r;
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  TruncatedSeries r;
  r.center = s.center;
  r.N = std::max(s.N - 1, 0);
  r.coef.assign(r.N + 1, Rational(0));
  for (int k = 1; k <= s.N; ++k) r.coef[k - 1] = Rational(k) * s.coef[k];
  return r;
}

bool series_is_zero(const TruncatedSeries& s) {
  return std::all_of(s.coef.begin(), s.coef.end(),
                     [](const Rational& c) { return is_zero(c); });
}

TruncatedSeries series_solve(const LinearODE& ode, const Rational& center, int N,
                             const std::vector<Rational>& initial) {
  const int n = ode.order();
  if (static_cast<int>(initial.size()) != n)
    throw MathError("series_solve: initial data must have length = order");
  for (const RatFunc& ai : ode.a)
    if (is_zero(ai.den().eval(center)))
      throw MathError("series_solve: center is a singular point");
  if (N < n - 1) N = n - 1;

  // coefficient series of each a_i at the center
  const int terms = N + 1;
  std::vector<std::vector<Rational>> ac(n);
  for (int i = 0; i < n; ++i) {
    Poly nc = ode.a[i].num().taylor_shift(center);
    Poly dc = ode.a[i].den().taylor_shift(center);
    ac[i].assign(terms, Rational(0));
    // power series division nc/dc
    for (int k = 0; k < terms; ++k) {
      Rational acc = nc.coeff(k);
      for (int j = 1; j <= k && j <= dc.degree(); ++j) acc -= dc.coeff(j) * ac[i][k - j];
      ac[i][k] = acc / dc.coeff(0);
    }
  }

  std::vector<Rational> y(N + 1, Rational(0));
  Rational fact(1);
  for (int k = 0; k < n; ++k) {
    if (k > 0) fact *= k;
    y[k] = initial[k] / fact;
  }
  // falling-factorial helper: coefficient of s^m in y^(i) is ff(m+i, i) * y[m+i]
  auto ff = [](int top, int i) {
    Rational f(1);
    for (int j = 0; j < i; ++j) f *= (top - j);
    return f;
  };
  for (int k = 0; k + n <= N; ++k) {
    Rational rhs(0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (is_zero(ac[i][j])) continue;
        int m = k - j;
        rhs += ac[i][j] * ff(m + i, i) * y[m + i];
      }
    }
    y[k + n] = -rhs / ff(k + n, n);
  }
  return series_make(center, std::move(y));
}

std::vector<Poly> polynomial_form(const LinearODE& ode) {
  Poly l(1L);
  for (const RatFunc& ai : ode.a) l = lcm(l, ai.den());
  std::vector<Poly> out;
  out.reserve(ode.order() + 1);
  for (const RatFunc& ai : ode.a) out.push_back(ai.num() * (l / ai.den()));
  out.push_back(l);
  return out;
}

RatFunc apply(const LinearODE& ode, const RatFunc& f) {
  RatFunc acc;
  RatFunc d = f;
  for (int i = 0; i < ode.order(); ++i) {
    acc += ode.a[i] * d;
    d = d.derivative();
  }
  return acc + d;
}

TruncatedSeries apply(const LinearODE& ode, const TruncatedSeries& s) {
  const int n = ode.order();
  std::vector<Poly> poly = polynomial_form(ode);
  const int outN = std::max(s.N - n, 0);
  std::vector<Rational> out(outN + 1, Rational(0));
  TruncatedSeries d = s;  // runs through the derivative series of s
  for (int i = 0; i <= n; ++i) {
    Poly shifted = poly[i].taylor_shift(s.center);
    for (int j = 0; j <= shifted.degree(); ++j) {
      const Rational& pc = shifted.coeff(j);
      if (is_zero(pc)) continue;
      for (int k = 0; k <= d.N && k + j <= outN; ++k) out[k + j] += pc * d.coef[k];
    }
    if (i < n) d = series_derivative(d);
  }
  return series_make(s.center, std::move(out));
}

}  // namespace pfeq
