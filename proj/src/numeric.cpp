#include "pfeq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

namespace pfeq {

namespace {

using BF = mpf_class;

// complex arithmetic on top of GMP floats; only field operations and square
// roots are needed along the integration path
struct CF {
  BF re{0}, im{0};

  CF() = default;
  CF(BF r, BF i) : re(std::move(r)), im(std::move(i)) {}
  explicit CF(const Rational& q) : re(q), im(0) {}
  explicit CF(long v) : re(v), im(0) {}
};

CF operator+(const CF& x, const CF& y) { return {BF(x.re + y.re), BF(x.im + y.im)}; }
CF operator-(const CF& x, const CF& y) { return {BF(x.re - y.re), BF(x.im - y.im)}; }
CF operator-(const CF& x) { return {BF(-x.re), BF(-x.im)}; }
CF operator*(const CF& x, const CF& y) {
  return {BF(x.re * y.re - x.im * y.im), BF(x.re * y.im + x.im * y.re)};
}
CF operator*(const CF& x, const BF& s) { return {BF(x.re * s), BF(x.im * s)}; }
CF operator/(const CF& x, const CF& y) {
  BF n(y.re * y.re + y.im * y.im);
  return {BF((x.re * y.re + x.im * y.im) / n), BF((x.im * y.re - x.re * y.im) / n)};
}
CF& operator+=(CF& x, const CF& y) { return x = x + y; }
CF& operator-=(CF& x, const CF& y) { return x = x - y; }

BF abs2(const CF& x) { return BF(x.re * x.re + x.im * x.im); }
BF absv(const CF& x) {
  BF a = abs2(x);
  BF r;
  mpf_sqrt(r.get_mpf_t(), a.get_mpf_t());
  return r;
}

// principal square root via half-angle identities (no transcendentals needed)
CF csqrt(const CF& z) {
  BF m = absv(z);
  if (sgn(m) == 0) return CF(0L);
  BF two(2);
  BF re2((m + z.re) / two), im2((m - z.re) / two);
  if (sgn(re2) < 0) re2 = 0;
  if (sgn(im2) < 0) im2 = 0;
  BF a, b;
  mpf_sqrt(a.get_mpf_t(), re2.get_mpf_t());
  mpf_sqrt(b.get_mpf_t(), im2.get_mpf_t());
  if (sgn(z.im) < 0) b = -b;
  return {a, b};
}

double to_double(const BF& x) { return x.get_d(); }

using Series = std::vector<CF>;  // coefficients in the local parameter s

Series series_mul_trunc(const Series& a, const Series& b, int terms) {
  Series r(terms, CF(0L));
  for (int i = 0; i < std::min<int>(a.size(), terms); ++i)
    for (int j = 0; j + i < terms && j < static_cast<int>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

Series series_inverse(const Series& d, int terms) {
  Series q(terms, CF(0L));
  q[0] = CF(1L) / d[0];
  for (int k = 1; k < terms; ++k) {
    CF acc(0L);
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
      acc += d[j] * q[k - j];
    q[k] = -acc / d[0];
  }
  return q;
}

// sqrt of a series with g[0] = branch; branch^2 == d[0]
Series series_sqrt(const Series& d, const CF& branch, int terms) {
  Series g(terms, CF(0L));
  g[0] = branch;
  CF twog0 = g[0] + g[0];
  for (int k = 1; k < terms; ++k) {
    CF acc = k < static_cast<int>(d.size()) ? d[k] : CF(0L);
    for (int j = 1; j < k; ++j) acc -= g[j] * g[k - j];
    g[k] = acc / twog0;
  }
  return g;
}

CF series_eval(const Series& s, const CF& x) {
  CF acc(0L);
  for (auto it = s.rbegin(); it != s.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// definite integral over the segment s in [0, delta]
CF series_integrate(const Series& s, const CF& delta) {
  CF acc(0L);
  CF p = delta;
  for (int k = 0; k < static_cast<int>(s.size()); ++k) {
    acc += s[k] * p * CF(Rational(1, k + 1));
    p = p * delta;
  }
  return acc;
}

struct RatFuncCF {
  std::vector<CF> num, den;  // exact images of the rational coefficients
};

RatFuncCF lower(const RatFunc& f) {
  RatFuncCF out;
  for (const Rational& c : f.num().coeffs()) out.num.push_back(CF(c));
  for (const Rational& c : f.den().coeffs()) out.den.push_back(CF(c));
  if (out.den.empty()) throw MathError("numeric: zero denominator");
  return out;
}

// Taylor coefficients of poly(center + s)
Series shift_poly(const std::vector<CF>& poly, const CF& center, int terms) {
  // Horner: p(center + s) built bottom-up in the truncated series ring
  Series acc(1, CF(0L));
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    // acc = acc * (center + s) + *it
    Series next(std::min<int>(acc.size() + 1, terms), CF(0L));
    for (int i = 0; i < static_cast<int>(acc.size()); ++i) {
      next[i] += acc[i] * center;
      if (i + 1 < static_cast<int>(next.size())) next[i + 1] += acc[i];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  acc.resize(terms, CF(0L));
  return acc;
}

Series expand_at(const RatFuncCF& f, const CF& center, int terms) {
  Series n = shift_poly(f.num, center, terms);
  Series d = shift_poly(f.den, center, terms);
  if (sgn(abs2(d[0])) == 0) throw MathError("numeric: expansion at a pole");
  return series_mul_trunc(n, series_inverse(d, terms), terms);
}

// local solution of y'' + a1 y' + a0 y = 0 with y(center) = y0, y'(center) = y1
Series local_solution(const RatFuncCF& a1, const RatFuncCF& a0, const CF& center,
                      const CF& y0, const CF& y1, int terms) {
  Series s1 = expand_at(a1, center, terms);
  Series s0 = expand_at(a0, center, terms);
  Series y(terms, CF(0L));
  y[0] = y0;
  if (terms > 1) y[1] = y1;
  for (int k = 0; k + 2 < terms; ++k) {
    CF acc(0L);
    for (int j = 0; j <= k; ++j) {
      acc += s1[j] * y[k - j + 1] * CF(static_cast<long>(k - j + 1));
      acc += s0[j] * y[k - j];
    }
    y[k + 2] = -acc / CF(static_cast<long>((k + 2) * (k + 1)));
  }
  return y;
}

std::vector<std::complex<double>> poly_roots_double(const Poly& p) {
  // Durand-Kerner; plenty for path planning
  int n = p.degree();
  if (n <= 0) return {};
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).get_d();
  for (int i = 0; i <= n; ++i) c[i] /= p.coeff(n).get_d();
  std::vector<std::complex<double>> r(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1, 0);
  for (int i = 0; i < n; ++i) {
    acc *= seed;
    r[i] = acc;
  }
  for (int it = 0; it < 300; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> v(0, 0);
      for (int k = n; k >= 0; --k) v = v * r[i] + c[k];
      std::complex<double> d(1, 0);
      for (int j = 0; j < n; ++j)
        if (j != i) d *= (r[i] - r[j]);
      std::complex<double> delta = v / d;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  return r;
}

struct PathPlan {
  std::vector<CF> nodes;  // closed polygonal loop, nodes.front() == nodes.back()
  std::vector<std::complex<double>> hazards;  // singularities to stay away from
};

// Rectangle around [0, lambda] avoiding the other base singular points.
PathPlan plan_rectangle(const RatFunc& c1, const RatFunc& c2, double lambda_max) {
  std::vector<std::complex<double>> sing;
  for (const Poly& den : {c1.den(), c2.den()})
    for (const auto& r : poly_roots_double(den)) sing.push_back(r);

  double margin_bound = 1e9;
  for (const auto& s : sing) {
    if (std::abs(s) < 1e-9) continue;  // the twist point at the origin
    // distance to the segment [0, lambda_max] on the real axis
    double x = std::clamp(s.real(), 0.0, lambda_max);
    double d = std::abs(s - std::complex<double>(x, 0));
    margin_bound = std::min(margin_bound, d);
  }
  double margin = margin_bound > 1e8 ? std::max(1.0, lambda_max) : 0.4 * margin_bound;
  if (margin < 1e-6) throw MathError("numeric: a singular point sits on the twist segment");

  double lo = -margin, hi = lambda_max + margin;
  for (const auto& s : sing) {
    if (std::abs(s) < 1e-9) continue;
    if (s.real() > lo - margin * 0.4 && s.real() < hi + margin * 0.4 &&
        std::abs(s.imag()) < margin * 1.4)
      throw MathError("numeric: cannot separate the path from a singular fiber");
  }

  PathPlan plan;
  plan.hazards = sing;
  plan.hazards.emplace_back(0.0, 0.0);
  auto mk = [](double x, double y) { return CF(BF(x), BF(y)); };
  plan.nodes = {mk(lo, -margin), mk(hi, -margin), mk(hi, margin), mk(lo, margin),
                mk(lo, -margin)};
  return plan;
}

double dist_to_hazards(const std::complex<double>& z,
                       const std::vector<std::complex<double>>& hazards,
                       const std::vector<double>& lambdas) {
  double d = 1e18;
  for (const auto& h : hazards) d = std::min(d, std::abs(z - h));
  for (double l : lambdas) d = std::min(d, std::abs(z - std::complex<double>(l, 0)));
  return d;
}

std::complex<double> approx(const CF& z) { return {to_double(z.re), to_double(z.im)}; }

struct LoopState {
  // per tracked lambda: current sqrt branch value and integral accumulator
  std::vector<CF> branch;
  std::vector<CF> integral;
};

// One pass around the loop. Continues the solution(s) with given initial data;
// when `accumulate` is set, also integrates G / sqrt(t (t - lambda_j)) along
// the way for every tracked lambda.
void continue_around(const PathPlan& plan, const RatFuncCF& a1, const RatFuncCF& a0,
                     std::vector<std::pair<CF, CF>>& solutions,
                     const std::vector<CF>& lambdas, LoopState* state, int terms,
                     double ratio) {
  std::vector<double> lam_d;
  for (const CF& l : lambdas) lam_d.push_back(to_double(l.re));
  for (size_t edge = 0; edge + 1 < plan.nodes.size(); ++edge) {
    const CF& start = plan.nodes[edge];
    const CF& end = plan.nodes[edge + 1];
    const CF span = end - start;
    double seglen = std::abs(approx(end) - approx(start));
    // fractions along the edge are exact rationals summing to exactly 1, so the
    // expansion centers and the step offsets stay mutually consistent
    Rational done_frac(0);
    CF p = start;
    while (done_frac < 1) {
      double done = done_frac.get_d() * seglen;
      double rho = dist_to_hazards(approx(p), plan.hazards, lam_d);
      double step = std::min(ratio * rho, seglen - done);
      Rational frac = (step >= (seglen - done) * (1 - 1e-9))
                          ? Rational(Rational(1) - done_frac)
                          : Rational(step / seglen);
      CF delta = span * CF(frac);
      // solution series at p for each tracked initial-value pair
      for (auto& [y, yp] : solutions) {
        Series ys = local_solution(a1, a0, p, y, yp, terms);
        if (state) {
          // integrand series per lambda: ys * (t(t - lambda))^(-1/2)
          for (size_t j = 0; j < lambdas.size(); ++j) {
            // h(s) = (p + s)(p + s - lambda): quadratic in s
            Series h = {p * (p - lambdas[j]), p + p - lambdas[j], CF(1L)};
            CF principal = csqrt(h[0]);
            CF& branch = state->branch[j];
            if (sgn(abs2(branch)) != 0) {
              BF dplus = abs2(principal - branch), dminus = abs2(principal + branch);
              if (dplus > dminus) principal = -principal;
            }
            Series g = series_sqrt(h, principal, terms);
            Series integrand = series_mul_trunc(ys, series_inverse(g, terms), terms);
            state->integral[j] += series_integrate(integrand, delta);
            branch = series_eval(g, delta);
          }
        }
        // advance to p + delta
        Series ysd(terms - 1);
        for (int k = 1; k < terms; ++k) ysd[k - 1] = ys[k] * CF(static_cast<long>(k));
        CF ynew = series_eval(ys, delta);
        CF ypnew = series_eval(ysd, delta);
        y = ynew;
        yp = ypnew;
      }
      done_frac += frac;
      p = start + span * CF(done_frac);
    }
  }
}

std::once_flag prec_flag;
std::mutex prec_mutex;

// exact finite-difference weights on the stencil {-N..N} for derivative k:
// w[k][j] with u^(k) ~ sum_j w[k][j] u(x0 + j h) / h^k
std::vector<std::vector<Rational>> fd_weights(int N, int kmax) {
  int npts = 2 * N + 1;
  std::vector<std::vector<Rational>> w(kmax + 1, std::vector<Rational>(npts));
  for (int i = 0; i < npts; ++i) {
    int xi = i - N;
    Poly li(Rational(1));
    for (int j = 0; j < npts; ++j) {
      int xj = j - N;
      if (xj == xi) continue;
      li = li * Poly::from_coeffs({Rational(-xj), Rational(1)});
      li = li.scaled_by_inverse(Rational(xi - xj));
    }
    Rational fact(1);
    for (int k = 0; k <= kmax; ++k) {
      if (k > 0) fact *= k;
      w[k][i] = fact * li.coeff(k);
    }
  }
  return w;
}

}  // namespace

NumericReport numeric_check(const TwistPF& tp, const RatFunc& c1, const RatFunc& c2,
                            const std::vector<Rational>& lambdas, double tol,
                            const NumericOptions& opt) {
  NumericReport report;
  if (lambdas.empty()) {
    report.message = "no sample points";
    return report;
  }
  if (tp.degenerate || tp.order() < 1)
    throw MathError("numeric_check: degenerate twist operator");

  std::lock_guard<std::mutex> lock(prec_mutex);
  const long bits = static_cast<long>(opt.digits * 3.3219281) + 64;
  mpf_set_default_prec(bits);

  const int nmax = tp.order();
  int terms = opt.series_order;
  if (terms <= 0)
    terms = static_cast<int>(opt.digits * 2.302585 / std::log(1.0 / opt.path_ratio)) + 12;

  RatFuncCF a1 = lower(c1), a0 = lower(c2);

  // derivative stencil: odd point count, wide enough for order nmax + margin
  const int N = std::max((nmax + 1) / 2 + 1, 3);
  auto weights = fd_weights(N, nmax);
  Rational h(opt.fd_step);  // the binary double, taken exactly
  if (is_zero(h) || sgn(h) < 0) h = Rational(1, 100000);

  for (const Rational& lam0 : lambdas) {
    double lam_d = lam0.get_d();
    if (lam_d <= 0) throw MathError("numeric_check: sample lambda must be positive");
    PathPlan plan = plan_rectangle(c1, c2, lam_d);

    // 1. monodromy of the loop: continue a basis once around
    std::vector<std::pair<CF, CF>> basis = {{CF(1L), CF(0L)}, {CF(0L), CF(1L)}};
    continue_around(plan, a1, a0, basis, {}, nullptr, terms, opt.path_ratio);
    // columns of M are the transported initial vectors
    CF m00 = basis[0].first, m10 = basis[0].second;
    CF m01 = basis[1].first, m11 = basis[1].second;
    // fixed vector of M: rows of (M - I) give the orthogonal relations
    CF a = m00 - CF(1L), b = m01, c = m10, d = m11 - CF(1L);
    CF v0, v1;
    if (abs2(a) + abs2(b) >= abs2(c) + abs2(d)) {
      v0 = b;
      v1 = -a;
    } else {
      v0 = d;
      v1 = -c;
    }
    BF vnorm = abs2(v0) + abs2(v1);
    if (sgn(vnorm) == 0 || to_double(vnorm) < 1e-40) {
      v0 = CF(1L);
      v1 = CF(0L);
    }

    // 2. integrate G / sqrt(t(t - lambda)) around the loop for each stencil shift
    std::vector<CF> lam_shifted;
    std::vector<Rational> lam_exact;
    for (int j = -N; j <= N; ++j) {
      Rational lj = lam0 + Rational(j) * h;
      lam_exact.push_back(lj);
      lam_shifted.push_back(CF(lj));
    }
    LoopState state;
    state.branch.assign(lam_shifted.size(), CF(0L));
    state.integral.assign(lam_shifted.size(), CF(0L));
    std::vector<std::pair<CF, CF>> g0 = {{v0, v1}};
    continue_around(plan, a1, a0, g0, lam_shifted, &state, terms, opt.path_ratio);

    // 3. finite-difference derivatives and the operator residual
    CF hk(1L);
    CF hbf(h);
    std::vector<CF> u_der(nmax + 1, CF(0L));
    for (int k = 0; k <= nmax; ++k) {
      CF acc(0L);
      for (size_t i = 0; i < state.integral.size(); ++i)
        acc += state.integral[i] * CF(weights[k][i]);
      if (k > 0) hk = hk * hbf;
      u_der[k] = acc / hk;
    }

    double max_term = 0.0, residual;
    CF total(0L);
    for (int n = 0; n <= nmax; ++n) {
      Rational cn = tp.ctilde[n].eval(lam0);
      CF term = u_der[n] * CF(cn);
      total += term;
      max_term = std::max(max_term, to_double(absv(term)));
    }
    NumericSample sample;
    sample.lambda = lam0;
    sample.period_magnitude = to_double(absv(state.integral[N]));
    if (max_term < 1e-10) {
      sample.rel_residual = 1.0;
      sample.pass = false;
      report.message = "period numerically zero; nothing to test";
    } else {
      residual = to_double(absv(total)) / max_term;
      sample.rel_residual = residual;
      sample.pass = residual < tol;
    }
    report.max_rel_residual = std::max(report.max_rel_residual, sample.rel_residual);
    report.pass = report.pass && sample.pass;
    report.samples.push_back(sample);
  }
  return report;
}

}  // namespace pfeq
