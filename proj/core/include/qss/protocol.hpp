#pragma once

// Advance-sharing protocol construction. For a code S and a qualified set J
// (complement Jbar is the advance-shareable set):
//
//   - the shortened stabilizer at J has codespace basis |phi_Jbar(u)>,
//     u in F_p^ell, on the Jbar registers;
//   - every codeword splits as
//       |Psi_v> = p^{-ell/2} sum_u |phi_Jbar(u)> |phi_J(u,v)>
//     with the companion states |phi_J(u,v)> extracted by partial inner
//     products; their orthonormality is exactly the qualified-set test;
//   - U_J maps |u>|0...0>|v> to |phi_J(u,v)> on the J registers;
//   - |Phi_J> = p^{-ell/2} sum_u |phi_Jbar(u)> |u> |0...0> is secret
//     independent, so the Jbar shares can be distributed in advance;
//   - encoding applies (I tensor U_J) to |Phi_J>|secret> and reproduces the
//     direct stabilizer encoding; reconstruction applies U_J^dag.
//
// Arbitrary (non-contiguous) J is handled by an explicit register
// permutation recorded in the bundle: Jbar ascending first, then J ascending.

#include <string>
#include <vector>

#include "qss/errors.hpp"
#include "qss/pauli.hpp"
#include "qss/simulator.hpp"

namespace qss {

inline constexpr double kOrthonormalityTol = 1e-7;  // companion Gram check
inline constexpr double kCodewordTol = 1e-6;        // projector acceptance
inline constexpr double kRoundTripTol = 1e-8;       // fidelity / purity floor

struct ProtocolBundle {
  StabilizerCode code;
  std::vector<int> J;            // qualified set, 1-based ascending
  std::vector<int> advance_set;  // complement of J
  int k = 0;
  int ell = 0;
  int padding = 0;               // |J| - k - ell
  std::vector<int> order;        // 0-based old register placed at position t
  std::vector<StateVector> basis_jbar;  // p^ell states on |Jbar| registers
  std::vector<StateVector> companion;   // index u*p^k + v, on |J| registers
  DenseOperator unitary;                // U_J on |J| registers
  StateVector phi;                      // |Phi_J> on n-k registers
  double unitarity_residual = 0.0;
};

// Direct stabilizer encoding: |v> -> v-th deterministic codespace basis
// vector, extended linearly.
StateVector encode_direct(const StabilizerCode& code, const StateVector& secret,
                          std::size_t dim_cap = kDefaultDimCap);

// Codespace basis of the stabilizer shortened at J (states on n-|J| qudits).
std::vector<StateVector> shortened_basis(const StabilizerCode& code,
                                         const std::vector<int>& J,
                                         std::size_t dim_cap = kDefaultDimCap);

// Extracts |phi_J(u,v)> = sqrt(p^ell) (<phi_Jbar(u)| tensor I) |Psi_v> from
// the given bases. Throws NotQualified when the extracted family is not
// orthonormal, which happens exactly when J is not a qualified set.
std::vector<StateVector> companion_basis(
    const StabilizerCode& code, const std::vector<int>& J,
    const std::vector<StateVector>& code_basis,
    const std::vector<StateVector>& jbar_basis);

// U_J with the defined columns |u>|0^padding>|v> -> companion[u*p^k+v]; the
// remaining columns are completed by Gram-Schmidt over the standard basis in
// index order. Throws PaddingError when |J| < k + ell.
DenseOperator build_unitary(const StabilizerCode& code, const std::vector<int>& J,
                            const std::vector<StateVector>& companion);

// |Phi_J> on (n - k) registers: Jbar block, then the ell register, then
// |J|-k-ell padding zeros.
StateVector initial_state(const StabilizerCode& code, const std::vector<int>& J,
                          const std::vector<StateVector>& jbar_basis);

// Full pipeline for an advance-shareable candidate set (J = its complement).
ProtocolBundle build_bundle(const StabilizerCode& code,
                            const std::vector<int>& advance_set,
                            std::size_t dim_cap = kDefaultDimCap);

// (I tensor U_J)(|Phi_J> |secret>), permuted back to the original register
// order. Equals encode_direct on the same secret.
StateVector encode_advance(const ProtocolBundle& bundle,
                           const StateVector& secret);

// Applies U_J^dag on the J registers and strips |Phi_J>; throws NotACodeword
// when the input fails the codespace projector or the auxiliary registers do
// not disentangle.
StateVector reconstruct(const ProtocolBundle& bundle,
                        const StateVector& codeword);

std::string bundle_summary_json(const ProtocolBundle& bundle);

}  // namespace qss
