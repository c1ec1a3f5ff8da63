#pragma once

#include <string>
#include <vector>

#include "pfeq/schwarzian.hpp"

namespace pfeq {

// Change of coordinates to_var = expr(from_var). In a verification
// src-sigma(to_var) -> tgt-sigma(from_var), the map substitutes the source
// coordinate as a function of the target one.
struct RationalMap {
  RatFunc expr;
  std::string from_var;  // variable of expr
  std::string to_var;    // coordinate the expression computes

  int degree() const {
    return std::max(expr.num().degree(), std::max(expr.den().degree(), 0));
  }
  bool is_constant() const { return expr.is_constant(); }
};

struct VerifyResult {
  bool ok = false;
  RatFunc residual;  // transported source minus target, in the target coordinate
};

// transport(sigma_src, phi) compared exactly against sigma_tgt.
VerifyResult verify_map(const QuadDifferential& sigma_src, const RationalMap& phi,
                        const QuadDifferential& sigma_tgt);

// The unique Moebius map with src[i] |-> tgt[i]; expression in the src coordinate.
RationalMap mobius_from_points(const std::vector<Point>& src, const std::vector<Point>& tgt,
                               const std::string& src_var, const std::string& tgt_var);

struct MarkedSigma {
  QuadDifferential sigma;
  std::vector<MarkedPoint> points;
};

// All Moebius maps tgt-coordinate -> src-coordinate matching marked points with
// equal indices (conjugate pairs to conjugate pairs) and passing verify_map.
std::vector<RationalMap> search_mobius(const MarkedSigma& src, const MarkedSigma& tgt);

// A two-sided comparison: both differentials transported into one shared
// coordinate must agree exactly.
struct ChainLeg {
  QuadDifferential sigma;
  RationalMap map;  // from the common coordinate to sigma's coordinate
};

struct CorrespondenceChain {
  std::vector<ChainLeg> legs;
  std::string note;
};

struct ChainReport {
  bool ok = false;
  std::vector<RatFunc> transported;  // per leg, in the common coordinate
};

ChainReport verify_chain(const CorrespondenceChain& chain);

}  // namespace pfeq
