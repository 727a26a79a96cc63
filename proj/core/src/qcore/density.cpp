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

#include "qpadlock/qcore/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpadlock::qcore {

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() ||
      (matrix_.rows() != 2 && matrix_.rows() != 4)) {
    throw std::invalid_argument("density operator must be 2x2 or 4x4");
  }
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  return DensityOperator(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
}

bool DensityOperator::is_physical(double tol) const {
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(matrix_.trace().real() - 1.0) > tol ||
      std::abs(matrix_.trace().imag()) > tol) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_);
  return solver.eigenvalues().minCoeff() >= -tol;
}

DensityOperator partial_trace(const QuantumRegister& reg,
                              const std::vector<int>& keep) {
  if (keep.empty() || keep.size() > 2) {
    throw std::invalid_argument("partial_trace keeps 1 or 2 qubits");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace keep set has duplicates");
  }
  for (int q : kept) {
    if (q < 0 || q >= reg.num_qubits()) {
      throw std::invalid_argument("partial_trace qubit index out of range");
    }
  }

  const int k = static_cast<int>(kept.size());
  const int reduced_dim = 1 << k;
  const auto amps = reg.amplitudes();

  // bit r of the reduced index is kept qubit kept[r]
  auto reduced_index = [&](std::uint64_t full) {
    int r = 0;
    for (int b = 0; b < k; ++b) {
      r |= static_cast<int>((full >> kept[b]) & 1u) << b;
    }
    return r;
  };
  auto traced_bits = [&](std::uint64_t full) {
    std::uint64_t masked = full;
    for (int b = 0; b < k; ++b) masked &= ~(std::uint64_t{1} << kept[b]);
    return masked;
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(reduced_dim, reduced_dim);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == Complex{0.0, 0.0}) continue;
    for (std::uint64_t j = 0; j < amps.size(); ++j) {
      if (traced_bits(i) != traced_bits(j)) continue;
      rho(reduced_index(i), reduced_index(j)) += amps[i] * std::conj(amps[j]);
    }
  }
  return DensityOperator(std::move(rho));
}

DensityOperator depolarize(const DensityOperator& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarizing probability must be in [0, 1]");
  }
  if (rho.dim() != 2) {
    throw std::invalid_argument("depolarize acts on single-qubit operators");
  }
  Eigen::MatrixXcd out =
      (1.0 - p) * rho.matrix() + p * 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  return DensityOperator(std::move(out));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance dimension mismatch");
  }
  Eigen::MatrixXcd diff = a.matrix() - b.matrix();
  diff = 0.5 * (diff + diff.adjoint().eval());  // symmetrize rounding noise
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityOperator& rho, const QuantumRegister& pure) {
  if (pure.dim() != static_cast<std::size_t>(rho.dim())) {
    throw std::invalid_argument("fidelity dimension mismatch");
  }
  const auto amps = pure.amplitudes();
  Eigen::VectorXcd psi(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) psi(i) = amps[i];
  const Complex val = (psi.adjoint() * rho.matrix() * psi)(0);
  return val.real();
}

}  // namespace qpadlock::qcore
