// Copyright 2026 The tlsgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tlsg/calibration.hpp"
#include "tlsg/experiments.hpp"
#include "tlsg/fidelity.hpp"
#include "tlsg/lindblad.hpp"

namespace {

using namespace tlsg;

SystemConfig swap_config() {
  SystemConfig cfg = default_two_qubit_config();
  cfg.epsilon_mhz = 277.2;
  return cfg;
}

void BM_LindbladRhs(benchmark::State& state) {
  const SystemConfig cfg = swap_config();
  const HilbertSpace space = cfg.space();
  const Operator h = build_transformed_hamiltonian(cfg, space);
  const auto collapse = collapse_operators(cfg, space);
  const DensityMatrix rho =
      kron(density_from_ket(tls_basis_state(2, 1)), density_from_ket(fock_state(10, 0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lindblad_rhs(h, collapse, rho));
  }
}
BENCHMARK(BM_LindbladRhs);

void BM_EvolveNanosecond(benchmark::State& state) {
  const SystemConfig cfg = swap_config();
  const HilbertSpace space = cfg.space();
  const Operator h = build_transformed_hamiltonian(cfg, space);
  const auto collapse = collapse_operators(cfg, space);
  const DensityMatrix rho =
      kron(density_from_ket(tls_basis_state(2, 1)), density_from_ket(fock_state(10, 0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(h, collapse, rho, 1.0));
  }
}
BENCHMARK(BM_EvolveNanosecond);

void BM_SwapCalibration(benchmark::State& state) {
  const SystemConfig cfg = default_two_qubit_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(calibrate_two_qubit(cfg, 0, 1));
  }
}
BENCHMARK(BM_SwapCalibration);

void BM_NielsenFidelity(benchmark::State& state) {
  const Operator h2 = embed_register((pauli_matrix(PauliAxis::X) +
                                      pauli_matrix(PauliAxis::Z)) / std::sqrt(2.0),
                                     0, 2);
  const QuantumChannel e = QuantumChannel::from_unitary(h2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nielsen_fidelity(e, h2));
  }
}
BENCHMARK(BM_NielsenFidelity);

void BM_ExpmHermitian(benchmark::State& state) {
  const SystemConfig cfg = swap_config();
  const HilbertSpace space = cfg.space();
  const Operator h = build_full_hamiltonian(cfg, space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm_hermitian(h, 1.0));
  }
}
BENCHMARK(BM_ExpmHermitian);

}  // namespace

BENCHMARK_MAIN();
