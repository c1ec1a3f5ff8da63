#include "pfeq/twist.hpp"

namespace pfeq {

Rational double_factorial_scale(int n) {
  Rational num(1);
  for (int i = 0; i < n; ++i) num *= 2;
  Rational den(1);
  for (int i = 1; i <= n; ++i) den *= (2 * i - 1);
  return num / den;
}

int TwistPF::order() const {
  for (int n = static_cast<int>(ctilde.size()) - 1; n >= 0; --n)
    if (!ctilde[n].is_zero_fn()) return n;
  return -1;
}

LinearODE TwistPF::monic_ode(std::string lambda_var) const {
  int n = order();
  if (n < 1) throw MathError("twist operator has order < 1");
  std::vector<RatFunc> a;
  a.reserve(n);
  for (int i = 0; i < n; ++i) a.push_back(ctilde[i] / ctilde[n]);
  LinearODE ode = make_ode(std::move(a), std::move(lambda_var));
  ode.raw = ctilde;
  return ode;
}

void shift_base(RatFunc& c1, RatFunc& c2, const Rational& s) {
  RatFunc shift = RatFunc::variable() + RatFunc(s);
  c1 = c1.compose(shift);
  c2 = c2.compose(shift);
}

TwistPF twist_pf(const RatFunc& c1, const RatFunc& c2) {
  const BiRatFunc t = BiRatFunc::variable();
  const RatFunc lambda_inner = RatFunc::variable();
  const BiRatFunc lam(lambda_inner);
  const BiRatFunc c1t = c1.convert<RatFunc>();
  const BiRatFunc c2t = c2.convert<RatFunc>();

  TwistPF out;
  const BiRatFunc two_t_minus_lam = BiRatFunc(2) * t - lam;
  const BiRatFunc t_tml = t * (t - lam);
  out.alpha = c1t + two_t_minus_lam / t_tml;
  out.beta = c2t + c1t * two_t_minus_lam / (BiRatFunc(2) * t_tml) -
             lam * lam / (BiRatFunc(4) * t_tml * t_tml);

  const BiPoly q0 = lcm(out.alpha.den(), out.beta.den());
  const BiRatFunc q0f(q0);
  const BiRatFunc alpha_p = out.alpha.derivative();
  const BiRatFunc pol0 =
      alpha_p * q0f + BiRatFunc(q0.derivative()) * out.alpha -
      BiRatFunc(q0.derivative().derivative()) - q0f * out.beta;
  if (!pol0.is_polynomial())
    throw MathError("internal: pol0 is not a polynomial in t");
  if (pol0.is_zero_fn()) {
    out.degenerate = true;
    out.q = q0f;
    out.ctilde = {RatFunc(0)};
    return out;
  }
  out.m = pol0.num().degree();

  const BiRatFunc t_minus_lam = t - lam;
  out.q = q0f / t_minus_lam.pow(out.m);
  const BiRatFunc qp = out.q.derivative();
  const BiRatFunc pol =
      alpha_p * out.q + qp * out.alpha - qp.derivative() - out.q * out.beta;

  // the defining relation p + q' = alpha q for p = alpha q - q'
  const BiRatFunc p = out.alpha * out.q - qp;
  if (p + qp != out.alpha * out.q)
    throw MathError("internal: certificate relation failed");

  // substitute t = s + lambda; the result must be a polynomial in 1/s
  const BiPoly num_shifted = pol.num().taylor_shift(lambda_inner);
  const BiPoly den_shifted = pol.den().taylor_shift(lambda_inner);
  const int k = den_shifted.degree();
  for (int i = 0; i < k; ++i)
    if (!is_zero(den_shifted.coeff(i)))
      throw MathError("internal: shifted denominator is not a power of s");
  if (num_shifted.degree() > k)
    throw MathError("internal: expansion has a positive power of s");
  if (k > out.m + 2) throw MathError("internal: expansion exceeds order m + 2");

  // c_n = coefficient of s^(-n); den_shifted is monic s^k
  std::vector<RatFunc> c(k + 1, RatFunc(0));
  for (int n = 0; n <= k; ++n) c[n] = num_shifted.coeff(k - n);

  // expansion identity: sum_n c_n s^(-n) must equal pol(s + lambda); the right
  // side is recomputed by rational composition, independent of the shift above
  const BiRatFunc s_var = BiRatFunc::variable();
  BiRatFunc recon(0);
  for (int n = 0; n <= k; ++n) recon += BiRatFunc(c[n]) / s_var.pow(n);
  if (recon != pol.compose(s_var + lam))
    throw MathError("internal: expansion identity failed");

  // scale, clear denominators, strip content
  for (int n = 0; n <= k; ++n) c[n] *= RatFunc(double_factorial_scale(n));
  Poly den_all(1L);
  for (const RatFunc& cn : c) den_all = lcm(den_all, cn.den());
  std::vector<Poly> cleared(k + 1);
  for (int n = 0; n <= k; ++n) cleared[n] = c[n].num() * (den_all / c[n].den());
  Poly content;
  for (const Poly& p2 : cleared) content = gcd(content, p2);
  if (!content.is_zero_poly() && content.degree() > 0)
    for (Poly& p2 : cleared) p2 = p2 / content;
  // normalize rational content: top coefficient primitive with positive leading
  int top = k;
  while (top > 0 && cleared[top].is_zero_poly()) --top;
  if (!cleared[top].is_zero_poly()) {
    Rational scale = cleared[top].leading();
    for (Poly& p2 : cleared) p2 = p2.scaled_by_inverse(scale);
    // re-clear to integer coefficients with gcd 1
    Int l(1);
    for (const Poly& p2 : cleared)
      for (const Rational& co : p2.coeffs()) l = lcm(l, co.get_den());
    Int g(0);
    for (Poly& p2 : cleared) {
      p2 = p2 * Rational(l);
      for (const Rational& co : p2.coeffs()) g = gcd(g, co.get_num());
    }
    if (sgn(g) != 0)
      for (Poly& p2 : cleared) p2 = p2.scaled_by_inverse(Rational(g));
  }
  out.ctilde.assign(k + 1, RatFunc(0));
  for (int n = 0; n <= k; ++n) out.ctilde[n] = RatFunc(cleared[n]);
  return out;
}

}  // namespace pfeq
