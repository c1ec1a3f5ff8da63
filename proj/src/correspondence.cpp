#include "pfeq/correspondence.hpp"

#include <algorithm>
#include <numeric>

#include "pfeq/expr.hpp"

namespace pfeq {

namespace {

// (a x + b)/(c x + d) as a 2x2 matrix over Q
struct Mobius {
  Rational a{1}, b{0}, c{0}, d{1};
};

Mobius compose(const Mobius& m, const Mobius& n) {  // m after n
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mobius inverse(const Mobius& m) { return {m.d, -m.b, -m.c, m.a}; }

RatFunc to_ratfunc(const Mobius& m) {
  Poly x = Poly::variable();
  return RatFunc(Poly(m.a) * x + Poly(m.b), Poly(m.c) * x + Poly(m.d));
}

// Moebius sending (p1, p2, p3) to (0, 1, infinity); points pairwise distinct.
Mobius to_standard_triple(const Point& p1, const Point& p2, const Point& p3) {
  auto finite = [](const Point& p) { return p.r; };
  if (p1.is_infinity()) {
    // (p2 - p3)/(x - p3)
    return {Rational(0), finite(p2) - finite(p3), Rational(1), -finite(p3)};
  }
  if (p2.is_infinity()) {
    // (x - p1)/(x - p3)
    return {Rational(1), -finite(p1), Rational(1), -finite(p3)};
  }
  if (p3.is_infinity()) {
    // (x - p1)/(p2 - p1)
    return {Rational(1), -finite(p1), Rational(0), finite(p2) - finite(p1)};
  }
  // ((x - p1)(p2 - p3))/((x - p3)(p2 - p1))
  Rational s = finite(p2) - finite(p3), t = finite(p2) - finite(p1);
  return {s, -finite(p1) * s, t, -finite(p3) * t};
}

bool all_rational_or_inf(const std::vector<Point>& pts) {
  return std::all_of(pts.begin(), pts.end(),
                     [](const Point& p) { return !p.is_algebraic(); });
}

}  // namespace

VerifyResult verify_map(const QuadDifferential& sigma_src, const RationalMap& phi,
                        const QuadDifferential& sigma_tgt) {
  if (phi.to_var != sigma_src.var || phi.from_var != sigma_tgt.var)
    throw MathError("verify_map: map direction does not match the differentials");
  if (phi.is_constant()) throw MathError("verify_map: constant map");
  QuadDifferential moved = transport(sigma_src, phi.expr, phi.from_var);
  VerifyResult r;
  r.residual = moved.f - sigma_tgt.f;
  r.ok = r.residual.is_zero_fn();
  return r;
}

RationalMap mobius_from_points(const std::vector<Point>& src, const std::vector<Point>& tgt,
                               const std::string& src_var, const std::string& tgt_var) {
  if (src.size() != 3 || tgt.size() != 3)
    throw MathError("mobius_from_points: need exactly three points per side");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[i] == src[j] || tgt[i] == tgt[j])
        throw MathError("mobius_from_points: repeated point");
  for (const Point& p : src)
    if (p.is_algebraic()) throw MathError("mobius_from_points: algebraic anchor point");
  for (const Point& p : tgt)
    if (p.is_algebraic()) throw MathError("mobius_from_points: algebraic anchor point");
  Mobius ms = to_standard_triple(src[0], src[1], src[2]);
  Mobius mt = to_standard_triple(tgt[0], tgt[1], tgt[2]);
  return {to_ratfunc(compose(inverse(mt), ms)), src_var, tgt_var};
}

std::vector<RationalMap> search_mobius(const MarkedSigma& src, const MarkedSigma& tgt) {
  if (src.points.size() < 3 || tgt.points.size() < 3)
    throw MathError("search_mobius: need at least three marked points per side");

  // split by (index, rational-vs-pair); a rational Moebius map can only send
  // conjugate pairs to conjugate pairs
  auto sort_key = [](const MarkedPoint& m) {
    // infinity last, rationals by value, pairs by minpoly string
    std::string k;
    if (m.location.is_infinity()) k = "2|";
    else if (m.location.is_algebraic()) k = "1|" + poly_str(m.location.minpoly(), "x");
    else k = "0|" + m.location.r.get_str();
    return std::to_string(m.index) + "#" + k;
  };

  std::vector<MarkedPoint> s_rat, s_pair, t_rat, t_pair;
  for (const MarkedPoint& m : src.points)
    (m.location.is_algebraic() ? s_pair : s_rat).push_back(m);
  for (const MarkedPoint& m : tgt.points)
    (m.location.is_algebraic() ? t_pair : t_rat).push_back(m);
  if (s_rat.size() != t_rat.size() || s_pair.size() != t_pair.size()) return {};

  auto by_key = [&](const MarkedPoint& x, const MarkedPoint& y) {
    return sort_key(x) < sort_key(y);
  };
  std::sort(s_rat.begin(), s_rat.end(), by_key);
  std::sort(t_rat.begin(), t_rat.end(), by_key);

  // index multisets must agree
  auto indices = [](const std::vector<MarkedPoint>& v) {
    std::vector<int> out;
    for (const MarkedPoint& m : v) out.push_back(m.index);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (indices(s_rat) != indices(t_rat) || indices(s_pair) != indices(t_pair)) return {};
  if (s_rat.size() < 3)
    throw MathError("search_mobius: fewer than three rational anchor points");

  const size_t n = s_rat.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<RationalMap> found;
  do {
    bool index_ok = true;
    for (size_t i = 0; i < n && index_ok; ++i)
      index_ok = (t_rat[i].index == s_rat[perm[i]].index);
    if (!index_ok) continue;

    RationalMap cand;
    try {
      cand = mobius_from_points({t_rat[0].location, t_rat[1].location, t_rat[2].location},
                                {s_rat[perm[0]].location, s_rat[perm[1]].location,
                                 s_rat[perm[2]].location},
                                tgt.sigma.var, src.sigma.var);
    } catch (const MathError&) {
      continue;
    }
    bool ok = true;
    for (size_t i = 3; i < n && ok; ++i)
      ok = (apply_map(cand.expr, t_rat[i].location) == s_rat[perm[i]].location);
    // conjugate pairs: the transformed minimal polynomial must vanish on the pair
    for (size_t i = 0; i < t_pair.size() && ok; ++i) {
      bool matched = false;
      for (size_t j = 0; j < s_pair.size() && !matched; ++j) {
        if (s_pair[j].index != t_pair[i].index) continue;
        RatFunc image = s_pair[j].location.minpoly().eval<RatFunc>(cand.expr);
        Poly tm = t_pair[i].location.minpoly();
        matched = !image.is_zero_fn() && (image.num() % tm).is_zero_poly();
      }
      ok = matched;
    }
    if (!ok) continue;
    if (!verify_map(src.sigma, cand, tgt.sigma).ok) continue;
    bool duplicate = std::any_of(found.begin(), found.end(), [&](const RationalMap& m) {
      return m.expr == cand.expr;
    });
    if (!duplicate) found.push_back(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return found;
}

ChainReport verify_chain(const CorrespondenceChain& chain) {
  if (chain.legs.size() < 2) throw MathError("verify_chain: need at least two legs");
  const std::string& common = chain.legs.front().map.from_var;
  ChainReport rep;
  for (const ChainLeg& leg : chain.legs) {
    if (leg.map.from_var != common)
      throw MathError("verify_chain: legs do not share a common coordinate");
    if (leg.map.to_var != leg.sigma.var)
      throw MathError("verify_chain: map does not land in the leg's coordinate");
    rep.transported.push_back(transport(leg.sigma, leg.map.expr, common).f);
  }
  rep.ok = true;
  for (size_t i = 1; i < rep.transported.size(); ++i)
    rep.ok = rep.ok && (rep.transported[i] == rep.transported[0]);
  return rep;
}

}  // namespace pfeq
