#include "qss/protocol.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "json_format.hpp"

namespace qss {

namespace {

int exact_log(std::size_t value, int p) {
  int e = 0;
  std::size_t v = value;
  while (v > 1) {
    if (v % static_cast<std::size_t>(p) != 0) {
      throw ValidationError("basis size is not a power of p");
    }
    v /= static_cast<std::size_t>(p);
    ++e;
  }
  return e;
}

// Jbar ascending, then J ascending (0-based old register indices).
std::vector<int> permuted_order(const std::vector<int>& J, int n) {
  std::vector<int> order;
  order.reserve(n);
  for (int j : complement_of(J, n)) order.push_back(j - 1);
  for (int j : J) order.push_back(j - 1);
  return order;
}

std::vector<int> inverse_order(const std::vector<int>& order) {
  std::vector<int> inv(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    inv[static_cast<std::size_t>(order[t])] = static_cast<int>(t);
  }
  return inv;
}

void check_secret(const StabilizerCode& code, const StateVector& secret) {
  if (code.k == 0) throw ValidationError("code has k = 0: no secret to encode");
  if (secret.p != code.p || secret.m != code.k) {
    throw DimensionMismatch("secret must live on k = " + std::to_string(code.k) +
                            " qudits of dimension " + std::to_string(code.p));
  }
  if (std::abs(secret.norm() - 1.0) > 1e-6) {
    throw ValidationError("secret state is not normalized");
  }
}

}  // namespace

StateVector encode_direct(const StabilizerCode& code, const StateVector& secret,
                          std::size_t dim_cap) {
  check_secret(code, secret);
  const std::vector<StateVector> basis = codespace_basis(code, dim_cap);
  StateVector out(code.p, code.n);
  for (std::size_t v = 0; v < basis.size(); ++v) {
    if (secret.amps[v] == cxd(0.0, 0.0)) continue;
    for (std::size_t i = 0; i < out.dim(); ++i) {
      out.amps[i] += secret.amps[v] * basis[v].amps[i];
    }
  }
  return out;
}

std::vector<StateVector> shortened_basis(const StabilizerCode& code,
                                         const std::vector<int>& J,
                                         std::size_t dim_cap) {
  return codespace_basis(shortened_stabilizer(code, J), dim_cap);
}

std::vector<StateVector> companion_basis(
    const StabilizerCode& code, const std::vector<int>& J,
    const std::vector<StateVector>& code_basis,
    const std::vector<StateVector>& jbar_basis) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  const int ell = exact_log(jbar_basis.size(), code.p);
  const double scale = std::sqrt(std::pow(static_cast<double>(code.p), ell));
  const std::vector<int> order = permuted_order(js, code.n);

  std::vector<StateVector> permuted;
  permuted.reserve(code_basis.size());
  for (const StateVector& psi : code_basis) {
    permuted.push_back(reorder_qudits(psi, order));
  }

  // index (u, v) -> u * p^k + v
  std::vector<StateVector> companion;
  companion.reserve(jbar_basis.size() * code_basis.size());
  for (std::size_t u = 0; u < jbar_basis.size(); ++u) {
    for (std::size_t v = 0; v < code_basis.size(); ++v) {
      StateVector r = partial_inner_prefix(jbar_basis[u], permuted[v]);
      for (cxd& amp : r.amps) amp *= scale;
      companion.push_back(std::move(r));
    }
  }

  // Gram matrix must be the identity; any macroscopic deviation means the
  // codeword marginals on Jbar depend on the secret, i.e. J is not qualified.
  double max_dev = 0.0;
  for (std::size_t i = 0; i < companion.size(); ++i) {
    for (std::size_t j = i; j < companion.size(); ++j) {
      const cxd g = inner(companion[i], companion[j]);
      const double dev = (i == j) ? std::abs(g - cxd(1.0, 0.0)) : std::abs(g);
      max_dev = std::max(max_dev, dev);
    }
  }
  if (max_dev > kOrthonormalityTol) {
    std::string s;
    for (int j : js) s += (s.empty() ? "" : ",") + std::to_string(j);
    throw NotQualified("set {" + s + "} is not qualified (companion Gram "
                       "deviation " + std::to_string(max_dev) + ")");
  }
  return companion;
}

DenseOperator build_unitary(const StabilizerCode& code, const std::vector<int>& J,
                            const std::vector<StateVector>& companion) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  const int q = static_cast<int>(js.size());
  const int k = code.k;
  const int ell = exact_log(companion.size(), code.p) - k;
  const int padding = q - k - ell;
  if (padding < 0) {
    throw PaddingError("|J| = " + std::to_string(q) + " < k + ell = " +
                       std::to_string(k + ell));
  }
  const std::size_t d = pow_size(code.p, q);
  const std::size_t dk = pow_size(code.p, k);
  const std::size_t dpad = pow_size(code.p, padding);

  DenseOperator U;
  U.p = code.p;
  U.m = q;
  U.mat = Eigen::MatrixXcd::Zero(d, d);
  std::vector<bool> used(d, false);
  for (std::size_t u = 0; u < companion.size() / dk; ++u) {
    for (std::size_t v = 0; v < dk; ++v) {
      const StateVector& state = companion[u * dk + v];
      if (state.dim() != d) {
        throw DimensionMismatch("companion state has wrong register count");
      }
      const std::size_t col = u * dpad * dk + v;  // |u>|0^padding>|v>
      for (std::size_t r = 0; r < d; ++r) U.mat(r, col) = state.amps[r];
      used[col] = true;
    }
  }
  // Complete the remaining columns: Gram-Schmidt of standard basis vectors in
  // index order against everything assigned so far.
  std::size_t next_free = 0;
  for (std::size_t cand = 0; cand < d; ++cand) {
    while (next_free < d && used[next_free]) ++next_free;
    if (next_free == d) break;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(d);
    w(cand) = 1.0;
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (std::size_t c = 0; c < d; ++c) {
        if (!used[c]) continue;
        w -= U.mat.col(c).dot(w) * U.mat.col(c);
      }
    }
    const double nn = w.norm();
    if (nn <= kNullVectorTol) continue;
    U.mat.col(next_free) = w / nn;
    used[next_free] = true;
  }
  for (bool u : used) {
    if (!u) throw ValidationError("unitary completion failed to fill all columns");
  }
  return U;
}

StateVector initial_state(const StabilizerCode& code, const std::vector<int>& J,
                          const std::vector<StateVector>& jbar_basis) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  const int q = static_cast<int>(js.size());
  const int ell = exact_log(jbar_basis.size(), code.p);
  const int padding = q - code.k - ell;
  if (padding < 0) {
    throw PaddingError("|J| = " + std::to_string(q) + " < k + ell = " +
                       std::to_string(code.k + ell));
  }
  const int m_jbar = code.n - q;
  StateVector phi(code.p, m_jbar + ell + padding);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(jbar_basis.size()));
  const std::size_t tail = pow_size(code.p, ell + padding);
  const std::size_t dpad = pow_size(code.p, padding);
  for (std::size_t u = 0; u < jbar_basis.size(); ++u) {
    const std::size_t tail_index = u * dpad;  // |u>|0^padding>
    for (std::size_t i = 0; i < jbar_basis[u].dim(); ++i) {
      phi.amps[i * tail + tail_index] += coeff * jbar_basis[u].amps[i];
    }
  }
  return phi;
}

ProtocolBundle build_bundle(const StabilizerCode& code,
                            const std::vector<int>& advance_set,
                            std::size_t dim_cap) {
  if (code.k == 0) {
    throw ValidationError("code has k = 0: nothing to share");
  }
  const std::vector<int> jbar = normalize_index_set(advance_set, code.n);
  const std::vector<int> J = complement_of(jbar, code.n);

  ProtocolBundle b;
  b.code = code;
  b.J = J;
  b.advance_set = jbar;
  b.k = code.k;
  b.order = permuted_order(J, code.n);

  const std::vector<StateVector> code_basis = codespace_basis(code, dim_cap);
  b.basis_jbar = shortened_basis(code, J, dim_cap);
  b.ell = exact_log(b.basis_jbar.size(), code.p);
  b.companion = companion_basis(code, J, code_basis, b.basis_jbar);
  b.padding = static_cast<int>(J.size()) - b.k - b.ell;
  if (b.padding < 0) {
    throw PaddingError("|J| = " + std::to_string(J.size()) + " < k + ell = " +
                       std::to_string(b.k + b.ell));
  }
  b.unitary = build_unitary(code, J, b.companion);
  b.unitarity_residual = b.unitary.unitarity_residual();
  b.phi = initial_state(code, J, b.basis_jbar);
  return b;
}

StateVector encode_advance(const ProtocolBundle& bundle,
                           const StateVector& secret) {
  check_secret(bundle.code, secret);
  StateVector state = tensor(bundle.phi, secret);  // permuted layout, n qudits
  std::vector<int> trailing(bundle.J.size());
  const int offset = bundle.code.n - static_cast<int>(bundle.J.size());
  for (std::size_t t = 0; t < trailing.size(); ++t) {
    trailing[t] = offset + 1 + static_cast<int>(t);
  }
  state = apply_on_subset(bundle.unitary, trailing, state);
  return reorder_qudits(state, inverse_order(bundle.order));
}

StateVector reconstruct(const ProtocolBundle& bundle,
                        const StateVector& codeword) {
  if (codeword.p != bundle.code.p || codeword.m != bundle.code.n) {
    throw DimensionMismatch("codeword has wrong register count");
  }
  const double expectation = codespace_expectation(bundle.code, codeword);
  if (expectation < 1.0 - kCodewordTol) {
    throw NotACodeword("codespace projector expectation " +
                       std::to_string(expectation));
  }
  StateVector state = reorder_qudits(codeword, bundle.order);
  DenseOperator udag;
  udag.p = bundle.unitary.p;
  udag.m = bundle.unitary.m;
  udag.mat = bundle.unitary.mat.adjoint();
  std::vector<int> trailing(bundle.J.size());
  const int offset = bundle.code.n - static_cast<int>(bundle.J.size());
  for (std::size_t t = 0; t < trailing.size(); ++t) {
    trailing[t] = offset + 1 + static_cast<int>(t);
  }
  state = apply_on_subset(udag, trailing, state);

  // The secret register must come out pure: the ell and padding registers
  // have to disentangle.
  std::vector<int> secret_regs(bundle.k);
  for (int t = 0; t < bundle.k; ++t) {
    secret_regs[static_cast<std::size_t>(t)] = bundle.code.n - bundle.k + 1 + t;
  }
  const Eigen::MatrixXcd rho = reduced_density_matrix(state, secret_regs);
  const double purity = rho.cwiseAbs2().sum();
  if (purity < 1.0 - kRoundTripTol) {
    throw NotACodeword("auxiliary registers fail to disentangle (purity " +
                       std::to_string(purity) + ")");
  }
  StateVector secret = partial_inner_prefix(bundle.phi, state);
  if (std::abs(secret.norm() - 1.0) > kRoundTripTol) {
    throw NotACodeword("initial-state overlap lost norm (" +
                       std::to_string(secret.norm()) + ")");
  }
  secret.normalize();
  return secret;
}

std::string bundle_summary_json(const ProtocolBundle& bundle) {
  nlohmann::ordered_json j;
  j["status"] = "ok";
  j["p"] = bundle.code.p;
  j["n"] = bundle.code.n;
  j["k"] = bundle.k;
  j["ell"] = bundle.ell;
  j["advance_set"] = bundle.advance_set;
  j["qualified_set"] = bundle.J;
  j["padding"] = bundle.padding;
  j["unitarity_residual"] = detail::round12(bundle.unitarity_residual);
  return j.dump();
}

}  // namespace qss
