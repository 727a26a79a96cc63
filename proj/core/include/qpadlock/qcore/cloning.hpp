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

#pragma once

#include "qpadlock/qcore/register.hpp"

namespace qpadlock::qcore {

/// Qubit indices of the two ancillas attached by uqcm_clone.
struct CloneResult {
  int clone_qubit;
  int machine_qubit;
};

/// Symmetric universal 1->2 cloning isometry applied to one qubit:
///
///   V|0> = sqrt(2/3)|00>|e0> + sqrt(1/6)(|01> + |10>)|e1>
///   V|1> = sqrt(2/3)|11>|e1> + sqrt(1/6)(|01> + |10>)|e0>
///
/// with slot order (original, clone, machine) and machine states e0 = |0>,
/// e1 = |1>. Attaches two ancillas (clone, then machine) at the top of the
/// register; the original stays at `qubit_index` and entanglement with the
/// rest of the register is preserved by linearity.
///
/// Each output slot's marginal is (2/3)*rho_in + (1/3)*I/2 for any input,
/// i.e. fidelity 5/6 against any pure input state: the optimal
/// state-independent copier.
///
/// Requires num_qubits <= 6 on entry so the result fits in 8; throws
/// CapacityError otherwise.
CloneResult uqcm_clone(QuantumRegister& reg, int qubit_index);

}  // namespace qpadlock::qcore
