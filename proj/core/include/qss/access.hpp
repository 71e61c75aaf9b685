#pragma once

// Algebraic classification of share sets. A set J is qualified iff the code
// and its symplectic dual agree after shortening at J; J is forbidden iff
// its complement is qualified; J is advance shareable under the
// entanglement-assisted criterion iff shortening at J removes the full
// 2|J| dimensions. Exhaustive enumeration produces a deterministic report.

#include <string>
#include <vector>

#include "qss/pauli.hpp"
#include "qss/simulator.hpp"

namespace qss {

enum class SubsetClass { Qualified, Forbidden, Intermediate };

const char* to_label(SubsetClass c);

struct SubsetEntry {
  std::vector<int> J;  // 1-based ascending
  SubsetClass cls = SubsetClass::Intermediate;
  bool eaqecc_shareable = false;
};

struct AccessReport {
  int n = 0;
  int p = 2;
  int k = 0;
  bool degenerate = false;  // k = 0: every set is both qualified and forbidden
  bool oracle_checked = false;
  std::vector<SubsetEntry> subsets;  // ordered by size, then lexicographic
  std::vector<std::vector<int>> separating_witnesses;  // forbidden but not
                                                       // EAQECC-shareable
};

// Convention, fixed by the known classifications of the fixture codes: to
// test J, shortening deletes the coordinate pairs OF J itself, leaving a
// code on the complementary registers. The same orientation applies to the
// advance-shareability dimension test below.
bool is_qualified(const StabilizerCode& code, const std::vector<int>& J);
bool is_forbidden(const StabilizerCode& code, const std::vector<int>& J);
bool is_eaqecc_shareable(const StabilizerCode& code, const std::vector<int>& J);

inline constexpr int kMaxEnumerationN = 20;

// Classifies every subset of {1..n}. With with_oracle the density-matrix
// oracle is run on each subset and any disagreement with the algebraic
// classification throws ValidationError (requires p^n within dim_cap).
AccessReport enumerate_access_structure(const StabilizerCode& code,
                                        bool with_oracle = false,
                                        std::size_t dim_cap = kDefaultDimCap,
                                        double oracle_tol = kComparisonTol);

std::string access_report_json(const AccessReport& report);

}  // namespace qss
