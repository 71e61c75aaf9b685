#include <cmath>

#include "qss/protocol.hpp"
#include "qss/simulator.hpp"

namespace qss {

namespace {

// Tomographically complete family on k qudits: every computational basis
// state, plus (|v> + |w>)/sqrt(2) and (|v> + i|w>)/sqrt(2) for every pair.
std::vector<StateVector> secret_family(int p, int k) {
  const std::size_t d = pow_size(p, k);
  std::vector<StateVector> out;
  for (std::size_t v = 0; v < d; ++v) out.push_back(basis_state(p, k, v));
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t w = v + 1; w < d; ++w) {
      StateVector plus(p, k);
      plus.amps[v] = r;
      plus.amps[w] = r;
      out.push_back(plus);
      StateVector iplus(p, k);
      iplus.amps[v] = r;
      iplus.amps[w] = cxd(0.0, r);
      out.push_back(iplus);
    }
  }
  return out;
}

}  // namespace

bool forbidden_oracle(const StabilizerCode& code, const std::vector<int>& J,
                      std::size_t dim_cap, double tol) {
  if (code.k < 1) {
    throw ValidationError("forbidden_oracle needs k >= 1");
  }
  const std::vector<int> js = normalize_index_set(J, code.n);
  if (js.empty()) return true;  // the empty marginal carries nothing

  bool first = true;
  Eigen::MatrixXcd reference;
  for (const StateVector& secret : secret_family(code.p, code.k)) {
    const StateVector encoded = encode_direct(code, secret, dim_cap);
    const Eigen::MatrixXcd rho = reduced_density_matrix(encoded, js);
    if (first) {
      reference = rho;
      first = false;
      continue;
    }
    if ((rho - reference).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace qss
