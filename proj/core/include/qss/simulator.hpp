#pragma once

// Dense complex state-vector engine for qudit registers: Pauli action,
// stabilizer projectors and deterministic codespace bases, operators applied
// on qudit subsets, qudit reordering, partial traces, and the operational
// forbidden-set oracle. Amplitude indices are big-endian: qudit 1 is the
// most significant digit.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qss/errors.hpp"
#include "qss/pauli.hpp"

namespace qss {

using cxd = std::complex<double>;

inline constexpr std::size_t kDefaultDimCap = 16384;  // max p^n simulated
inline constexpr double kConstructionTol = 1e-9;
inline constexpr double kComparisonTol = 1e-7;   // cross-implementation checks
inline constexpr double kNullVectorTol = 1e-8;   // Gram-Schmidt discard

std::size_t pow_size(int p, int m);  // p^m, throws on overflow

struct StateVector {
  int p = 2;
  int m = 0;                // qudit count
  std::vector<cxd> amps;    // length p^m

  StateVector() = default;
  StateVector(int p, int m);
  StateVector(int p, int m, std::vector<cxd> amps);

  std::size_t dim() const { return amps.size(); }
  double norm() const;
  void normalize();
  // Multiplies by the phase making the first amplitude of magnitude
  // > kNullVectorTol real positive.
  void canonicalize_phase();
};

StateVector basis_state(int p, int m, std::size_t index);

cxd inner(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|
StateVector tensor(const StateVector& a, const StateVector& b);

// w^phase * X(a) Z(b) applied to a basis index: Z contributes w^{<b,digits>},
// X shifts every digit by a. This is the defining action, used everywhere a
// dense matrix would be too big.
StateVector apply_pauli(const PauliElement& g, const StateVector& v);

struct DenseOperator {
  int p = 2;
  int m = 0;
  Eigen::MatrixXcd mat;

  std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }
  double unitarity_residual() const;  // max |(U^dag U - I)_ij|
  double projector_residual() const;  // max |(P^2 - P)_ij| + hermiticity
};

DenseOperator identity_operator(int p, int m);
DenseOperator pauli_matrix(const PauliElement& g,
                           std::size_t dim_cap = kDefaultDimCap);

// v := P v with P = prod_g (1/p) sum_t g^t, the joint +1 eigenprojector.
StateVector project_codespace(const StabilizerCode& code, StateVector v);
double codespace_expectation(const StabilizerCode& code, const StateVector& v);

// Deterministic orthonormal basis of the codespace (length p^k): projector
// applied to standard basis vectors in index order, Gram-Schmidt, null
// vectors dropped, first nonzero amplitude made real positive.
std::vector<StateVector> codespace_basis(const StabilizerCode& code,
                                         std::size_t dim_cap = kDefaultDimCap);

// op acts on the registers listed in J (1-based, op factor t on J[t]); all
// other registers see the identity.
StateVector apply_on_subset(const DenseOperator& op, const std::vector<int>& J,
                            const StateVector& v);

// order[t] = old register index (0-based) placed at new position t.
StateVector reorder_qudits(const StateVector& v, const std::vector<int>& order);

// Partial trace onto the registers in J (ascending); Hermitian, trace 1.
Eigen::MatrixXcd reduced_density_matrix(const StateVector& v,
                                        const std::vector<int>& J);

// (<prefix| tensor I) |full>: contracts the first prefix.m registers.
StateVector partial_inner_prefix(const StateVector& prefix,
                                 const StateVector& full);

// True iff the reduced state on J is independent of the secret, probed with
// a tomographically complete family of k-qudit secrets encoded by the code.
bool forbidden_oracle(const StabilizerCode& code, const std::vector<int>& J,
                      std::size_t dim_cap = kDefaultDimCap,
                      double tol = kComparisonTol);

// JSON round-trip for states ({"p","m","amps":[[re,im],...]}) and operators.
std::string state_json(const StateVector& v);
StateVector state_from_json(const std::string& text);
std::string operator_json(const DenseOperator& op);

}  // namespace qss
