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

#include <Eigen/Dense>
#include <vector>

#include "qpadlock/qcore/register.hpp"

namespace qpadlock::qcore {

/// Mixed-state view over one or two qubits (dim 2 or 4). Registers stay
/// pure; density operators exist only as analysis views produced by
/// partial_trace and channel arithmetic.
class DensityOperator {
 public:
  /// Takes a square 2x2 or 4x4 matrix. Physicality (Hermitian, unit trace,
  /// PSD) is the producer's contract; is_physical() checks it.
  explicit DensityOperator(Eigen::MatrixXcd matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  static DensityOperator maximally_mixed(int dim);

  /// Hermitian within tol, trace 1 within tol, eigenvalues >= -tol.
  bool is_physical(double tol = kNumericTol) const;

 private:
  Eigen::MatrixXcd matrix_;
};

/// Reduced density operator over `keep` (1 or 2 distinct qubit indices).
/// Kept qubits map to bits of the reduced index in ascending qubit order.
DensityOperator partial_trace(const QuantumRegister& reg,
                              const std::vector<int>& keep);

/// (1-p)*rho + p*I/2 on a single qubit. Requires 0 <= p <= 1 and dim 2.
DensityOperator depolarize(const DensityOperator& rho, double p);

/// (1/2)*||a - b||_1: the maximal distinguishing advantage between the two
/// states. In [0, 1]; 0 iff equal, 1 iff orthogonal support.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

/// <psi|rho|psi> for a pure state held in a register of matching dimension.
double fidelity(const DensityOperator& rho, const QuantumRegister& pure);

}  // namespace qpadlock::qcore
