#include "qss/access.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "json_format.hpp"

namespace qss {

const char* to_label(SubsetClass c) {
  switch (c) {
    case SubsetClass::Qualified: return "qualified";
    case SubsetClass::Forbidden: return "forbidden";
    case SubsetClass::Intermediate: return "intermediate";
  }
  return "?";
}

bool is_qualified(const StabilizerCode& code, const std::vector<int>& J) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  const GfMatrix shortened = shorten(code.f_matrix, js);
  const GfMatrix dual_shortened = shorten(symplectic_dual(code.f_matrix), js);
  return row_space_equal(shortened, dual_shortened);
}

bool is_forbidden(const StabilizerCode& code, const std::vector<int>& J) {
  return is_qualified(code, complement_of(J, code.n));
}

bool is_eaqecc_shareable(const StabilizerCode& code, const std::vector<int>& J) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  const long long want = static_cast<long long>(code.f_matrix.rows()) -
                         2LL * static_cast<long long>(js.size());
  if (want < 0) return false;  // the criterion cannot hold
  return static_cast<long long>(shorten(code.f_matrix, js).rows()) == want;
}

namespace {

// All subsets of {1..n} ordered by size then lexicographically.
std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(1) << n);
  out.push_back({});
  for (int size = 1; size <= n; ++size) {
    std::vector<int> cur(size);
    for (int i = 0; i < size; ++i) cur[i] = i + 1;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

AccessReport enumerate_access_structure(const StabilizerCode& code,
                                        bool with_oracle, std::size_t dim_cap,
                                        double oracle_tol) {
  if (code.n > kMaxEnumerationN) {
    throw ValidationError("n = " + std::to_string(code.n) +
                          " too large for exhaustive enumeration (max " +
                          std::to_string(kMaxEnumerationN) + ")");
  }
  if (with_oracle && pow_size(code.p, code.n) > dim_cap) {
    throw CapExceeded("oracle cross-check needs p^n within the dimension cap");
  }

  AccessReport report;
  report.n = code.n;
  report.p = code.p;
  report.k = code.k;
  report.degenerate = (code.k == 0);
  report.oracle_checked = with_oracle;

  for (const std::vector<int>& J : all_subsets(code.n)) {
    SubsetEntry e;
    e.J = J;
    const bool q = is_qualified(code, J);
    const bool f = is_forbidden(code, J);
    if (q) {
      e.cls = SubsetClass::Qualified;
    } else if (f) {
      e.cls = SubsetClass::Forbidden;
    } else {
      e.cls = SubsetClass::Intermediate;
    }
    if (q && f && !report.degenerate) {
      throw ValidationError("subset both qualified and forbidden on a k > 0 code");
    }
    e.eaqecc_shareable = is_eaqecc_shareable(code, J);
    if (f && !e.eaqecc_shareable) report.separating_witnesses.push_back(J);
    if (with_oracle && code.k >= 1) {
      const bool oracle_f = forbidden_oracle(code, J, dim_cap, oracle_tol);
      if (oracle_f != f) {
        std::string s = "{";
        for (int j : J) s += std::to_string(j) + ",";
        s += "}";
        throw ValidationError("density-matrix oracle disagrees with the "
                              "algebraic classification on " + s);
      }
    }
    report.subsets.push_back(std::move(e));
  }
  return report;
}

std::string access_report_json(const AccessReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["p"] = report.p;
  j["k"] = report.k;
  j["degenerate"] = report.degenerate;
  if (report.oracle_checked) j["oracle_checked"] = true;
  nlohmann::ordered_json subsets = nlohmann::ordered_json::array();
  for (const SubsetEntry& e : report.subsets) {
    nlohmann::ordered_json je;
    je["J"] = e.J;
    je["class"] = to_label(e.cls);
    je["eaqecc_shareable"] = e.eaqecc_shareable;
    subsets.push_back(std::move(je));
  }
  j["subsets"] = std::move(subsets);
  j["separating_witnesses"] = report.separating_witnesses;
  return j.dump();
}

}  // namespace qss
