#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfeq/correspondence.hpp"

namespace pfeq {
namespace catalog {

// One twist family: base fibration data, the degree-2 operator coefficients
// (a, b) in lambda, its sigma invariant, and the quaternion discriminant.
struct CatalogEntry {
  int id = 0;
  std::vector<std::string> fiber_types;
  std::vector<MarkedPoint> singular_points;  // four, with Schwarzian indices
  RatFunc a, b;
  QuadDifferential sigma;
  int discriminant = 0;
};

// One of the explicit Shimura-curve equations (non-normalized A y'' + B y' + C y)
// or the index-determined discriminant-6 differential.
struct ElkiesEntry {
  std::string label;                    // "V*10", "V*14", "V*15", "V6", "V6-zeta"
  std::vector<RatFunc> raw;             // C, B, A when an explicit equation exists
  std::optional<QuadDifferential> sigma_printed;  // the published sigma, if any
  QuadDifferential sigma;               // authoritative differential
  std::vector<MarkedPoint> marked_points;
  std::string var;
};

struct CorrespondenceRecord {
  std::string name;
  std::variant<RationalMap, CorrespondenceChain> check;
  // for maps: which differentials to compare
  std::string src_label;  // catalog id as "#N" or an Elkies label
  std::string tgt_label;
  std::string note;
};

const CatalogEntry& get_entry(int id);            // id in 1..11
const ElkiesEntry& get_elkies(const std::string& label);
const std::vector<CorrespondenceRecord>& list_correspondences();

QuadDifferential sigma_of(const std::string& label);  // "#N" or Elkies label

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  int passed() const;
};

// Per-entry consistency: the sigma identity 4b - a^2 - 2a', every stored index,
// and the symmetric-square round trip.
Report verify_entry(int id);

// Everything: the 11 entries, the Elkies rows, the index-determined
// discriminant-6 differentials, the explicit values of the quadratic singular
// points, and every correspondence record.
Report verify_all();

}  // namespace catalog
}  // namespace pfeq
