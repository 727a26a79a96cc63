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

#include "qpadlock/qcore/register.hpp"

#include <cmath>
#include <string>

namespace qpadlock::qcore {

RotationGate::RotationGate(double theta) : theta_(theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  cos_ = std::cos(theta);
  sin_ = std::sin(theta);
}

QuantumRegister::QuantumRegister(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must be in [1, 8], got " +
                                std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

QuantumRegister QuantumRegister::basis_state(int num_qubits,
                                             std::uint64_t index) {
  QuantumRegister reg(num_qubits);
  if (index >= reg.dim()) {
    throw std::invalid_argument("basis index out of range");
  }
  reg.amps_[0] = Complex{0.0, 0.0};
  reg.amps_[index] = Complex{1.0, 0.0};
  return reg;
}

double QuantumRegister::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

int QuantumRegister::attach_ancilla(int count) {
  if (count < 1) {
    throw std::invalid_argument("ancilla count must be positive");
  }
  if (num_qubits_ + count > kMaxQubits) {
    throw CapacityError("register would exceed " +
                        std::to_string(kMaxQubits) + " qubits");
  }
  const int first_new = num_qubits_;
  num_qubits_ += count;
  // new qubits are the high bits, initialized |0>: existing amplitudes keep
  // their indices and the new tail is zero
  amps_.resize(std::size_t{1} << num_qubits_, Complex{0.0, 0.0});
  return first_new;
}

void QuantumRegister::renormalize() {
  const double n = norm();
  if (n <= 0.0) {
    throw std::runtime_error("cannot renormalize a zero state");
  }
  for (Complex& a : amps_) a /= n;
}

namespace {

void check_index(const QuantumRegister& reg, int qubit_index) {
  if (qubit_index < 0 || qubit_index >= reg.num_qubits()) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit_index) +
                                " out of range for " +
                                std::to_string(reg.num_qubits()) + " qubits");
  }
}

}  // namespace

void apply_gate(QuantumRegister& reg, int qubit_index,
                const RotationGate& gate) {
  check_index(reg, qubit_index);
  auto& amps = reg.mutable_amplitudes();
  const std::uint64_t stride = std::uint64_t{1} << qubit_index;
  const double c = gate.cos();
  const double s = gate.sin();
  for (std::uint64_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      const std::uint64_t i0 = base | low;
      const std::uint64_t i1 = i0 | stride;
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i1];
      amps[i0] = c * a0 - s * a1;
      amps[i1] = s * a0 + c * a1;
    }
  }
}

void apply_pauli(QuantumRegister& reg, int qubit_index, Pauli p) {
  check_index(reg, qubit_index);
  auto& amps = reg.mutable_amplitudes();
  const std::uint64_t stride = std::uint64_t{1} << qubit_index;
  const Complex i_unit{0.0, 1.0};
  for (std::uint64_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      const std::uint64_t i0 = base | low;
      const std::uint64_t i1 = i0 | stride;
      switch (p) {
        case Pauli::kX:
          std::swap(amps[i0], amps[i1]);
          break;
        case Pauli::kY: {
          const Complex a0 = amps[i0];
          amps[i0] = -i_unit * amps[i1];
          amps[i1] = i_unit * a0;
          break;
        }
        case Pauli::kZ:
          amps[i1] = -amps[i1];
          break;
      }
    }
  }
}

double outcome_probability(const QuantumRegister& reg, int qubit_index,
                           double basis_angle, int outcome) {
  check_index(reg, qubit_index);
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("outcome must be 0 or 1");
  }
  // probability of the rotated-basis outcome = probability of the
  // computational outcome after counter-rotating the qubit
  QuantumRegister scratch = reg;
  apply_gate(scratch, qubit_index, RotationGate(-basis_angle));
  const std::uint64_t stride = std::uint64_t{1} << qubit_index;
  double p = 0.0;
  const auto amps = scratch.amplitudes();
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (static_cast<int>((idx & stride) != 0) == outcome) {
      p += std::norm(amps[idx]);
    }
  }
  return p;
}

MeasurementRecord measure(QuantumRegister& reg, int qubit_index,
                          double basis_angle, RandomSource& rng) {
  check_index(reg, qubit_index);
  // rotate into the measurement frame, project in the computational basis,
  // rotate back: the collapsed qubit ends in R(basis_angle)|outcome>
  apply_gate(reg, qubit_index, RotationGate(-basis_angle));

  auto& amps = reg.mutable_amplitudes();
  const std::uint64_t stride = std::uint64_t{1} << qubit_index;
  double p0 = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if ((idx & stride) == 0) p0 += std::norm(amps[idx]);
  }
  p0 = std::min(1.0, std::max(0.0, p0));

  const int outcome = rng.uniform() < p0 ? 0 : 1;
  const double p_outcome = outcome == 0 ? p0 : 1.0 - p0;

  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (static_cast<int>((idx & stride) != 0) != outcome) {
      amps[idx] = Complex{0.0, 0.0};
    }
  }
  reg.renormalize();
  apply_gate(reg, qubit_index, RotationGate(basis_angle));
  return MeasurementRecord{outcome, basis_angle, p_outcome};
}

}  // namespace qpadlock::qcore
