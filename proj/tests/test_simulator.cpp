#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "corpus.hpp"
#include "fixtures_ramp71.hpp"
#include "oracles.hpp"
#include "qss/simulator.hpp"

using namespace qss;
using namespace qss_test;

TEST_SUITE_BEGIN("simulator");

TEST_CASE("pauli matrix of the identity element") {
  const DenseOperator op = pauli_matrix(PauliElement::identity(2, 2));
  CHECK((op.mat - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-qubit X and Z matrices") {
  const DenseOperator x = pauli_matrix(pauli_parse("X", 2));
  CHECK(x.mat(0, 1) == cxd(1, 0));
  CHECK(x.mat(1, 0) == cxd(1, 0));
  CHECK(x.mat(0, 0) == cxd(0, 0));

  const DenseOperator z = pauli_matrix(pauli_parse("Z", 2));
  CHECK(z.mat(0, 0) == cxd(1, 0));
  CHECK(z.mat(1, 1) == cxd(-1, 0));
  CHECK(z.unitarity_residual() < 1e-15);
}

TEST_CASE("qutrit XZ acts as X(Z|i>) = w^i |i+1>") {
  const PauliElement xz = pauli_parse("1|1", 3);
  const DenseOperator op = pauli_matrix(xz);
  const cxd w(std::cos(2 * std::numbers::pi / 3), std::sin(2 * std::numbers::pi / 3));
  for (int i = 0; i < 3; ++i) {
    const StateVector out = apply_pauli(xz, basis_state(3, 1, i));
    for (int j = 0; j < 3; ++j) {
      const cxd expect = (j == (i + 1) % 3) ? std::pow(w, i) : cxd(0, 0);
      CHECK(std::abs(out.amps[j] - expect) < 1e-12);
      CHECK(std::abs(op.mat(j, i) - expect) < 1e-12);
    }
  }
}

TEST_CASE("dense matrices respect the dimension cap") {
  const PauliElement g = PauliElement::identity(2, 15);  // 2^15 > 16384
  CHECK_THROWS_AS(pauli_matrix(g), CapExceeded);
  CHECK_NOTHROW(pauli_matrix(PauliElement::identity(2, 3), 8));
  CHECK_THROWS_AS(pauli_matrix(PauliElement::identity(2, 4), 8), CapExceeded);
}

TEST_CASE("codespace of a single-qubit Z stabilizer is |0>") {
  const StabilizerCode code = parse_stabilizer_text("p=2 n=1\nZ\n");
  const auto basis = codespace_basis(code);
  REQUIRE(basis.size() == 1);
  CHECK(std::abs(basis[0].amps[0] - cxd(1, 0)) < 1e-12);
  CHECK(std::abs(basis[0].amps[1]) < 1e-12);
}

TEST_CASE("codespace of the Bell stabilizer") {
  const auto basis = codespace_basis(bell_state());
  REQUIRE(basis.size() == 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(basis[0].amps[0] - cxd(r, 0)) < 1e-12);
  CHECK(std::abs(basis[0].amps[3] - cxd(r, 0)) < 1e-12);
  CHECK(std::abs(basis[0].amps[1]) < 1e-12);
  CHECK(std::abs(basis[0].amps[2]) < 1e-12);
}

TEST_CASE("the reference codeword pair sits in the sign-flipped eigenspace") {
  // The reference expansion of this code's codeword pair is an exact joint
  // eigenvector family with eigenvalue -1 on generator 5 and +1 on the other
  // five, i.e. it spans the codespace of the stabilizer with generator 5
  // negated, not of the phase-free one. Pin down that diagnosis exactly.
  const StabilizerCode code = ramp71();
  const auto basis = codespace_basis(code);
  REQUIRE(basis.size() == 2);

  for (const StateVector& psi :
       {ramp71_fixture::psi0(), ramp71_fixture::psi1()}) {
    for (std::size_t gi = 0; gi < code.generators.size(); ++gi) {
      const StateVector gpsi = apply_pauli(code.generators[gi], psi);
      const double expected_sign = (gi == 4) ? -1.0 : 1.0;
      double dev = 0.0;
      for (std::size_t i = 0; i < psi.dim(); ++i) {
        dev = std::max(dev,
                       std::abs(gpsi.amps[i] - expected_sign * psi.amps[i]));
      }
      CHECK(dev < 1e-9);
    }
    // hence orthogonal to the +1 codespace of the phase-free generators
    double overlap = 0.0;
    for (const StateVector& b : basis) overlap += std::norm(inner(b, psi));
    CHECK(overlap < 1e-18);
  }

  // negating generator 5 reproduces a code whose span holds the pair
  StabilizerCode flipped = code;
  flipped.generators[4].phase_exp = 1;
  const auto flipped_basis = codespace_basis(flipped);
  REQUIRE(flipped_basis.size() == 2);
  for (const StateVector& psi :
       {ramp71_fixture::psi0(), ramp71_fixture::psi1()}) {
    double overlap = 0.0;
    for (const StateVector& b : flipped_basis) {
      overlap += std::norm(inner(b, psi));
    }
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("codespace dimension is p^(n - rank) across the corpus") {
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    const auto basis = codespace_basis(code);
    CHECK(basis.size() == pow_size(code.p, code.k));
    for (const StateVector& b : basis) {
      CHECK(std::abs(b.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("stabilizer projector is idempotent on random states") {
  std::mt19937_64 rng(9001);
  for (const auto& [name, code] : full_corpus()) {
    CAPTURE(name);
    const StateVector v = random_state(code.p, code.n, rng);
    const StateVector pv = project_codespace(code, v);
    const StateVector ppv = project_codespace(code, pv);
    double dev = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      dev = std::max(dev, std::abs(ppv.amps[i] - pv.amps[i]));
    }
    CHECK(dev < 1e-9);
  }
}

TEST_CASE("applying the identity on a subset changes nothing") {
  std::mt19937_64 rng(9002);
  const StateVector v = random_state(2, 3, rng);
  const StateVector w = apply_on_subset(identity_operator(2, 2), {1, 3}, v);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    CHECK(std::abs(w.amps[i] - v.amps[i]) < 1e-12);
  }
}

TEST_CASE("X applied on the first qubit of |00>") {
  const DenseOperator x = pauli_matrix(pauli_parse("X", 2));
  const StateVector out = apply_on_subset(x, {1}, basis_state(2, 2, 0));
  CHECK(std::abs(out.amps[2] - cxd(1, 0)) < 1e-12);  // |10>
}

TEST_CASE("subset application agrees with the permutation oracle") {
  std::mt19937_64 rng(9003);
  for (int trial = 0; trial < 10; ++trial) {
    DenseOperator op;
    op.p = 2;
    op.m = 2;
    op.mat = random_unitary(4, rng);
    const StateVector v = random_state(2, 3, rng);
    const StateVector got = apply_on_subset(op, {1, 3}, v);

    // independent route: bring registers (1,3) to the front, apply op x I,
    // bring them back
    const StateVector front = reorder_qudits(v, {0, 2, 1});
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(8, 8);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        for (int t = 0; t < 2; ++t) big(2 * r + t, 2 * c + t) = op.mat(r, c);
      }
    }
    StateVector applied(2, 3);
    for (int r = 0; r < 8; ++r) {
      cxd acc(0, 0);
      for (int c = 0; c < 8; ++c) acc += big(r, c) * front.amps[c];
      applied.amps[r] = acc;
    }
    const StateVector expect = reorder_qudits(applied, {0, 2, 1});
    for (std::size_t i = 0; i < v.dim(); ++i) {
      CHECK(std::abs(got.amps[i] - expect.amps[i]) < 1e-12);
    }
  }
}

TEST_CASE("trailing contiguous subsets act as identity tensor op") {
  std::mt19937_64 rng(9004);
  DenseOperator op;
  op.p = 2;
  op.m = 2;
  op.mat = random_unitary(4, rng);
  const StateVector v = random_state(2, 3, rng);
  const StateVector got = apply_on_subset(op, {2, 3}, v);
  for (int lead = 0; lead < 2; ++lead) {
    for (int t = 0; t < 4; ++t) {
      cxd acc(0, 0);
      for (int c = 0; c < 4; ++c) acc += op.mat(t, c) * v.amps[4 * lead + c];
      CHECK(std::abs(got.amps[4 * lead + t] - acc) < 1e-12);
    }
  }
}

TEST_CASE("unitary subset application preserves the norm") {
  std::mt19937_64 rng(9005);
  for (int trial = 0; trial < 5; ++trial) {
    DenseOperator op;
    op.p = 3;
    op.m = 1;
    op.mat = random_unitary(3, rng);
    const StateVector v = random_state(3, 3, rng);
    const StateVector w = apply_on_subset(op, {2}, v);
    CHECK(std::abs(w.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("subset application validates shapes") {
  const StateVector v = basis_state(2, 2, 0);
  CHECK_THROWS_AS(apply_on_subset(identity_operator(2, 2), {1}, v),
                  DimensionMismatch);
  CHECK_THROWS_AS(apply_on_subset(identity_operator(2, 1), {3}, v),
                  ValidationError);
  CHECK_THROWS_AS(apply_on_subset(identity_operator(3, 1), {1}, v),
                  DimensionMismatch);
}

TEST_CASE("reduced density matrix of a product state is a projector") {
  std::mt19937_64 rng(9006);
  const StateVector rest = random_state(2, 2, rng);
  const StateVector v = tensor(basis_state(2, 1, 0), rest);
  const Eigen::MatrixXcd rho = reduced_density_matrix(v, {1});
  CHECK(std::abs(rho(0, 0) - cxd(1, 0)) < 1e-12);
  CHECK(std::abs(rho(1, 1)) < 1e-12);
  CHECK(std::abs(rho(0, 1)) < 1e-12);
}

TEST_CASE("reduced density matrix of a Bell half is maximally mixed") {
  const auto basis = codespace_basis(bell_state());
  const Eigen::MatrixXcd rho = reduced_density_matrix(basis[0], {1});
  CHECK(std::abs(rho(0, 0) - cxd(0.5, 0)) < 1e-12);
  CHECK(std::abs(rho(1, 1) - cxd(0.5, 0)) < 1e-12);
  CHECK(std::abs(rho(0, 1)) < 1e-12);
}

TEST_CASE("reduced density matrices are PSD with unit trace") {
  std::mt19937_64 rng(9007);
  for (int trial = 0; trial < 6; ++trial) {
    const StateVector v = random_state(2, 4, rng);
    const Eigen::MatrixXcd rho = reduced_density_matrix(v, {2, 4});
    CHECK(std::abs(rho.trace() - cxd(1, 0)) < 1e-9);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("qudit reordering composes with its inverse") {
  std::mt19937_64 rng(9008);
  const StateVector v = random_state(3, 3, rng);
  const std::vector<int> order = {2, 0, 1};
  std::vector<int> inverse(3);
  for (int t = 0; t < 3; ++t) inverse[order[t]] = t;
  const StateVector w = reorder_qudits(reorder_qudits(v, order), inverse);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    CHECK(std::abs(w.amps[i] - v.amps[i]) < 1e-15);
  }
  // spot check the digit semantics: |012> reordered by {2,0,1} -> |201>
  const StateVector b = reorder_qudits(basis_state(3, 3, 0 * 9 + 1 * 3 + 2), order);
  CHECK(std::abs(b.amps[2 * 9 + 0 * 3 + 1] - cxd(1, 0)) < 1e-15);
}

TEST_CASE("state JSON round-trips") {
  std::mt19937_64 rng(9009);
  const StateVector v = random_state(3, 2, rng);
  const StateVector w = state_from_json(state_json(v));
  CHECK(w.p == v.p);
  CHECK(w.m == v.m);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    CHECK(std::abs(w.amps[i] - v.amps[i]) < 1e-11);
  }
}

TEST_CASE("forbidden oracle on tiny fixtures") {
  const StabilizerCode fq = five_qubit();
  CHECK(forbidden_oracle(fq, {}));
  CHECK(forbidden_oracle(fq, {1, 2}));
  CHECK_FALSE(forbidden_oracle(fq, {1, 2, 3}));

  const StabilizerCode code = ramp71();
  CHECK(forbidden_oracle(code, {1, 2, 3, 4}));
  CHECK_FALSE(forbidden_oracle(code, {5, 6, 7}));
}

TEST_SUITE_END();
