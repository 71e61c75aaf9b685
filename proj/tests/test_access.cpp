#include <doctest.h>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qss/access.hpp"

using namespace qss;
using namespace qss_test;

namespace {

// all subsets of {1..n} in no particular order
std::vector<std::vector<int>> subsets_of(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> J;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) J.push_back(j + 1);
    }
    out.push_back(std::move(J));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("access");

TEST_CASE("the full set is qualified and the empty set is forbidden") {
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    std::vector<int> all(code.n);
    for (int j = 0; j < code.n; ++j) all[j] = j + 1;
    CHECK(is_qualified(code, all));
    CHECK(is_forbidden(code, {}));
    if (code.k > 0) {
      CHECK_FALSE(is_qualified(code, {}));
      CHECK_FALSE(is_forbidden(code, all));
    }
  }
}

TEST_CASE("the [[7,1]] reference classification") {
  const StabilizerCode code = ramp71();
  CHECK(is_qualified(code, {5, 6, 7}));
  CHECK(is_forbidden(code, {1, 2, 3, 4}));
  CHECK_FALSE(is_eaqecc_shareable(code, {1, 2, 3, 4}));
}

TEST_CASE("the five-qubit code is a threshold scheme at 3 shares") {
  const StabilizerCode code = five_qubit();
  for (const std::vector<int>& J : subsets_of(5)) {
    const bool q = is_qualified(code, J);
    const bool f = is_forbidden(code, J);
    CHECK(q == (J.size() >= 3));
    CHECK(f == (J.size() <= 2));
    // operational cross-check
    CHECK(f == forbidden_oracle(code, J));
  }
}

TEST_CASE("qualified and forbidden are complements of each other") {
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    for (const std::vector<int>& J : subsets_of(code.n)) {
      CHECK(is_qualified(code, J) ==
            is_forbidden(code, complement_of(J, code.n)));
    }
  }
}

TEST_CASE("EAQECC-shareable sets are always forbidden") {
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    for (const std::vector<int>& J : subsets_of(code.n)) {
      if (is_eaqecc_shareable(code, J)) CHECK(is_forbidden(code, J));
    }
  }
}

TEST_CASE("EAQECC criterion on small sets of the [[7,1]] code") {
  const StabilizerCode code = ramp71();
  CHECK(is_eaqecc_shareable(code, {}));

  // independent route for J = {1}: enumerate all of f(S) and count the
  // vectors vanishing on coordinates 1 and n+1
  const auto space = brute_force_row_space(code.f_matrix);
  std::size_t vanishing = 0;
  for (const std::vector<int>& v : space) {
    if (v[0] == 0 && v[7] == 0) ++vanishing;
  }
  std::size_t dim = 0;
  while (vanishing > 1) {
    vanishing /= 2;
    ++dim;
  }
  const bool expected = (dim == code.f_matrix.rows() - 2);
  CHECK(is_eaqecc_shareable(code, {1}) == expected);
  CHECK(shorten(code.f_matrix, {1}).rows() == dim);
}

TEST_CASE("qualified sets are monotone under supersets") {
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    for (const std::vector<int>& J : subsets_of(code.n)) {
      if (!is_qualified(code, J)) continue;
      for (int extra = 1; extra <= code.n; ++extra) {
        std::vector<int> bigger = J;
        bigger.push_back(extra);
        CHECK(is_qualified(code, bigger));
      }
    }
  }
}

TEST_CASE("enumeration report is ordered, complete and consistent") {
  const StabilizerCode code = ramp71();
  const AccessReport report = enumerate_access_structure(code);
  CHECK(report.n == 7);
  CHECK(report.k == 1);
  CHECK_FALSE(report.degenerate);
  CHECK(report.subsets.size() == 128);

  // ordering: by size then lexicographic
  for (std::size_t i = 1; i < report.subsets.size(); ++i) {
    const auto& a = report.subsets[i - 1].J;
    const auto& b = report.subsets[i].J;
    const bool ordered = a.size() < b.size() || (a.size() == b.size() && a < b);
    CHECK(ordered);
  }

  bool witness_found = false;
  for (const auto& w : report.separating_witnesses) {
    if (w == std::vector<int>{1, 2, 3, 4}) witness_found = true;
  }
  CHECK(witness_found);

  for (const SubsetEntry& e : report.subsets) {
    CHECK(is_eaqecc_shareable(code, e.J) == e.eaqecc_shareable);
  }
}

TEST_CASE("five-qubit report has no intermediate sets") {
  const AccessReport report = enumerate_access_structure(five_qubit());
  for (const SubsetEntry& e : report.subsets) {
    CHECK(e.cls != SubsetClass::Intermediate);
    CHECK((e.cls == SubsetClass::Qualified) == (e.J.size() >= 3));
  }
}

TEST_CASE("the [[4,2,2]] code has intermediate 2-sets") {
  const AccessReport report = enumerate_access_structure(four_two_two());
  int intermediate = 0;
  for (const SubsetEntry& e : report.subsets) {
    if (e.cls == SubsetClass::Intermediate) {
      ++intermediate;
      CHECK(e.J.size() == 2);
    }
  }
  CHECK(intermediate == 6);
}

TEST_CASE("a k = 0 state flags as degenerate") {
  const AccessReport report = enumerate_access_structure(bell_state());
  CHECK(report.degenerate);
  for (const SubsetEntry& e : report.subsets) {
    CHECK(is_qualified(bell_state(), e.J));
    CHECK(is_forbidden(bell_state(), e.J));
  }
}

TEST_CASE("oracle cross-check mode passes on small codes") {
  CHECK_NOTHROW(enumerate_access_structure(five_qubit(), true));
  CHECK_NOTHROW(enumerate_access_structure(four_two_two(), true));
}

TEST_CASE("enumeration refuses oversized inputs") {
  // 21 commuting single-X generators
  std::vector<PauliElement> gens;
  for (int i = 0; i < 21; ++i) {
    std::vector<int> row(42, 0);
    row[i] = 1;
    gens.push_back(PauliElement::from_symplectic(2, row));
  }
  const StabilizerCode big = validate_stabilizer(gens);
  CHECK_THROWS_AS(enumerate_access_structure(big), ValidationError);
}

TEST_CASE("report serializes to the frozen JSON shape") {
  const std::string text = access_report_json(enumerate_access_structure(five_qubit()));
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["n"] == 5);
  CHECK(j["p"] == 2);
  CHECK(j["k"] == 1);
  CHECK(j["degenerate"] == false);
  CHECK(j["subsets"].size() == 32);
  CHECK(j["subsets"][0]["J"].is_array());
  CHECK(j["subsets"][0]["class"] == "forbidden");
  CHECK(j["subsets"][0]["eaqecc_shareable"] == true);
  CHECK(j["separating_witnesses"].is_array());
}

TEST_CASE("index sets out of range are rejected") {
  const StabilizerCode code = five_qubit();
  CHECK_THROWS_AS(is_qualified(code, {6}), ValidationError);
  CHECK_THROWS_AS(is_forbidden(code, {0}), ValidationError);
  CHECK_THROWS_AS(is_eaqecc_shareable(code, {-1}), ValidationError);
}

TEST_SUITE_END();
