#include <benchmark/benchmark.h>

#include <random>

#include "qss/access.hpp"
#include "qss/gfmat.hpp"
#include "qss/pauli.hpp"
#include "qss/protocol.hpp"
#include "qss/simulator.hpp"

namespace {

qss::GfMatrix random_matrix(int p, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, p - 1);
  std::vector<int> entries(rows * cols);
  for (int& e : entries) e = dist(rng);
  return qss::GfMatrix(p, rows, cols, std::move(entries));
}

qss::StabilizerCode ramp71() {
  return qss::parse_stabilizer_text(
      "p=2 n=7\nXXXXIII\nZZIIIII\nIIZZIII\nXXIIXZZ\nIIXXZXZ\nIZZIZXX\n");
}

qss::StabilizerCode five_qubit() {
  return qss::parse_stabilizer_text("p=2 n=5\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n");
}

void BM_rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int p = static_cast<int>(state.range(0));
  const qss::GfMatrix m = random_matrix(p, 64, 128, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::rref(m).rank);
  }
}
BENCHMARK(BM_rref)->Arg(2)->Arg(251);

void BM_symplectic_dual(benchmark::State& state) {
  const qss::StabilizerCode code = ramp71();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::symplectic_dual(code.f_matrix).rows());
  }
}
BENCHMARK(BM_symplectic_dual);

void BM_codespace_basis(benchmark::State& state) {
  const qss::StabilizerCode code = ramp71();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::codespace_basis(code).size());
  }
}
BENCHMARK(BM_codespace_basis);

void BM_build_bundle(benchmark::State& state) {
  const qss::StabilizerCode code = ramp71();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::build_bundle(code, {1, 2, 3, 4}).ell);
  }
}
BENCHMARK(BM_build_bundle);

void BM_roundtrip(benchmark::State& state) {
  const qss::StabilizerCode code = ramp71();
  const qss::ProtocolBundle bundle = qss::build_bundle(code, {1, 2, 3, 4});
  qss::StateVector secret(2, 1);
  secret.amps[0] = secret.amps[1] = qss::cxd(1 / std::sqrt(2.0), 0);
  for (auto _ : state) {
    const qss::StateVector rec =
        qss::reconstruct(bundle, qss::encode_advance(bundle, secret));
    benchmark::DoNotOptimize(rec.amps[0]);
  }
}
BENCHMARK(BM_roundtrip);

void BM_access_enumeration(benchmark::State& state) {
  const qss::StabilizerCode code = five_qubit();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::enumerate_access_structure(code).subsets.size());
  }
}
BENCHMARK(BM_access_enumeration);

void BM_forbidden_oracle(benchmark::State& state) {
  const qss::StabilizerCode code = five_qubit();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qss::forbidden_oracle(code, {1, 2}));
  }
}
BENCHMARK(BM_forbidden_oracle);

}  // namespace

BENCHMARK_MAIN();
