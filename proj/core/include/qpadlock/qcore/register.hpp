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

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpadlock/qcore/random.hpp"

namespace qpadlock::qcore {

using Complex = std::complex<double>;

/// Registers hold at most 8 polarization qubits (256 amplitudes); everything
/// is exact dense complex double arithmetic.
inline constexpr int kMaxQubits = 8;

/// Tolerance for algebraic identities that hold exactly up to rounding.
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for quantities that accumulate over many operations.
inline constexpr double kNumericTol = 1e-10;

/// Raised when an operation would grow a register past kMaxQubits.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rotation in the {|0>,|1>} plane (linear polarization) by theta radians:
///
///   R(theta) = [[cos t, -sin t],
///               [sin t,  cos t]]
///
/// a real orthogonal matrix with determinant 1. All such rotations commute,
/// and R(-theta) is the exact inverse. This one-parameter family is the
/// whole gate set of the honest protocol.
class RotationGate {
 public:
  explicit RotationGate(double theta);

  double theta() const { return theta_; }
  double cos() const { return cos_; }
  double sin() const { return sin_; }
  RotationGate inverse() const { return RotationGate(-theta_); }

  /// Row-major 2x2 matrix {r00, r01, r10, r11}.
  std::array<double, 4> matrix() const { return {cos_, -sin_, sin_, cos_}; }

 private:
  double theta_;
  double cos_;
  double sin_;
};

/// Exact pure state of 1..8 qubits. The sole holder of amplitudes in a
/// session; nothing that leaves this class ever carries amplitude data.
///
/// Indexing convention: qubit q is bit q of the amplitude index (qubit 0 is
/// the least significant bit). Ancillas attach at the top and a register
/// never shrinks; discarded qubits are only ever traced out into
/// DensityOperator views.
class QuantumRegister {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit QuantumRegister(int num_qubits);

  /// Computational basis state |index> on `num_qubits` qubits.
  static QuantumRegister basis_state(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

  /// L2 norm; 1 within 1e-10 after every library operation.
  double norm() const;

  /// Appends `count` fresh |0> qubits at the top. Returns the index of the
  /// first new qubit. Throws CapacityError past kMaxQubits.
  int attach_ancilla(int count = 1);

  /// Direct amplitude access for gate kernels.
  std::vector<Complex>& mutable_amplitudes() { return amps_; }

  void renormalize();

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Applies `gate` to the indexed tensor factor. Norm-preserving.
void apply_gate(QuantumRegister& reg, int qubit_index, const RotationGate& gate);

enum class Pauli { kX, kY, kZ };

/// Single-qubit Pauli; used by the stochastic depolarizing channel.
void apply_pauli(QuantumRegister& reg, int qubit_index, Pauli p);

/// Outcome of one projective measurement. `probability_of_outcome` is the
/// exact Born-rule value the outcome was sampled with.
struct MeasurementRecord {
  int outcome;
  double basis_angle;
  double probability_of_outcome;
};

/// Born probability of `outcome` when measuring `qubit_index` in the basis
/// {R(basis_angle)|0>, R(basis_angle)|1>}, without collapsing.
double outcome_probability(const QuantumRegister& reg, int qubit_index,
                           double basis_angle, int outcome);

/// Projective measurement of one qubit in the rotated basis
/// {R(basis_angle)|0>, R(basis_angle)|1>}. Samples by the Born rule from
/// `rng`, collapses and renormalizes the register in place.
MeasurementRecord measure(QuantumRegister& reg, int qubit_index,
                          double basis_angle, RandomSource& rng);

}  // namespace qpadlock::qcore
