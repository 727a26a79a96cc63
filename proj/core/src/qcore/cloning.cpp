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

#include "qpadlock/qcore/cloning.hpp"

#include <cmath>

namespace qpadlock::qcore {

CloneResult uqcm_clone(QuantumRegister& reg, int qubit_index) {
  if (qubit_index < 0 || qubit_index >= reg.num_qubits()) {
    throw std::invalid_argument("uqcm_clone qubit index out of range");
  }
  if (reg.num_qubits() > kMaxQubits - 2) {
    throw CapacityError("uqcm_clone needs two ancillas; register too large");
  }

  const int clone_q = reg.attach_ancilla(2);
  const int machine_q = clone_q + 1;

  const std::uint64_t orig_bit = std::uint64_t{1} << qubit_index;
  const std::uint64_t clone_bit = std::uint64_t{1} << clone_q;
  const std::uint64_t machine_bit = std::uint64_t{1} << machine_q;

  const double w_keep = std::sqrt(2.0 / 3.0);
  const double w_mix = std::sqrt(1.0 / 6.0);

  auto& amps = reg.mutable_amplitudes();
  std::vector<Complex> out(amps.size(), Complex{0.0, 0.0});

  // fresh ancillas are |00>, so only indices with both new bits clear carry
  // amplitude; distribute each onto the three isometry terms
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & (clone_bit | machine_bit)) != 0) continue;
    const Complex a = amps[i];
    if (a == Complex{0.0, 0.0}) continue;
    if ((i & orig_bit) == 0) {
      // V|0> = w_keep|0,0,0> + w_mix(|0,1,1> + |1,0,1>)
      out[i] += w_keep * a;
      out[i | clone_bit | machine_bit] += w_mix * a;
      out[(i | orig_bit) | machine_bit] += w_mix * a;
    } else {
      // V|1> = w_keep|1,1,1> + w_mix(|0,1,0> + |1,0,0>)
      out[i | clone_bit | machine_bit] += w_keep * a;
      out[(i & ~orig_bit) | clone_bit] += w_mix * a;
      out[i] += w_mix * a;
    }
  }
  amps = std::move(out);
  return CloneResult{clone_q, machine_q};
}

}  // namespace qpadlock::qcore
