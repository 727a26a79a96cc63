// Copyright 2026 The qpadlock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qpadlock/qcore/cloning.hpp"
#include "qpadlock/qcore/random.hpp"
#include "qpadlock/qcore/register.hpp"

namespace {

using qpadlock::qcore::QuantumRegister;
using qpadlock::qcore::RandomSource;
using qpadlock::qcore::RotationGate;

void BM_ApplyGate(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  auto reg = QuantumRegister::basis_state(qubits, 0);
  const RotationGate gate(0.7);
  int q = 0;
  for (auto _ : state) {
    qpadlock::qcore::apply_gate(reg, q, gate);
    q = (q + 1) % qubits;
    benchmark::DoNotOptimize(reg.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyGate)->Arg(1)->Arg(4)->Arg(8);

void BM_MeasureCollapse(benchmark::State& state) {
  RandomSource rng(7);
  for (auto _ : state) {
    auto reg = QuantumRegister::basis_state(1, 0);
    qpadlock::qcore::apply_gate(reg, 0, RotationGate(rng.angle()));
    const auto record = qpadlock::qcore::measure(reg, 0, 0.0, rng);
    benchmark::DoNotOptimize(record.outcome);
  }
}
BENCHMARK(BM_MeasureCollapse);

void BM_UqcmClone(benchmark::State& state) {
  RandomSource rng(11);
  for (auto _ : state) {
    auto reg = QuantumRegister::basis_state(1, 0);
    qpadlock::qcore::apply_gate(reg, 0, RotationGate(rng.angle()));
    const auto handles = qpadlock::qcore::uqcm_clone(reg, 0);
    benchmark::DoNotOptimize(handles.clone_qubit);
  }
}
BENCHMARK(BM_UqcmClone);

}  // namespace
