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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qpadlock/qcore/cloning.hpp"
#include "qpadlock/qcore/density.hpp"
#include "qpadlock/qcore/random.hpp"
#include "qpadlock/qcore/register.hpp"

namespace qc = qpadlock::qcore;
using qc::Complex;

namespace {

// Test-local dense single-qubit operator application. Written against the
// index convention only (qubit q is bit q), independently of the library's
// stride walk, so the two implementations check each other.
std::vector<Complex> dense_apply(const std::vector<Complex>& amps, int qubit,
                                 const std::array<Complex, 4>& m) {
  std::vector<Complex> out(amps.size());
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const std::uint64_t base = i & ~bit;
    const int row = (i & bit) ? 1 : 0;
    out[i] = m[2 * row] * amps[base] + m[2 * row + 1] * amps[base | bit];
  }
  return out;
}

qc::QuantumRegister random_state(int qubits, qc::RandomSource& rng) {
  auto reg = qc::QuantumRegister::basis_state(qubits, 0);
  for (auto& a : reg.mutable_amplitudes()) {
    a = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  }
  reg.renormalize();
  return reg;
}

Eigen::Vector2cd to_eigen(const qc::QuantumRegister& reg) {
  REQUIRE(reg.dim() == 2);
  return Eigen::Vector2cd(reg.amplitude(0), reg.amplitude(1));
}

double max_amp_diff(const qc::QuantumRegister& a,
                    const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < b.size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitude(i) - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("basis states and register shape") {
  const auto reg = qc::QuantumRegister::basis_state(3, 5);
  CHECK(reg.num_qubits() == 3);
  CHECK(reg.dim() == 8);
  CHECK(reg.amplitude(5) == Complex(1.0, 0.0));
  CHECK(reg.norm() == doctest::Approx(1.0).epsilon(1e-15));
  for (std::uint64_t i = 0; i < 8; ++i) {
    if (i != 5) CHECK(reg.amplitude(i) == Complex(0.0, 0.0));
  }
  CHECK_THROWS(qc::QuantumRegister::basis_state(0, 0));
  CHECK_THROWS(qc::QuantumRegister::basis_state(9, 0));
  CHECK_THROWS(qc::QuantumRegister::basis_state(2, 4));
}

TEST_CASE("ancillas attach at the top as |0>") {
  auto reg = qc::QuantumRegister::basis_state(1, 1);
  const int first = reg.attach_ancilla(2);
  CHECK(first == 1);
  CHECK(reg.num_qubits() == 3);
  // |001>: old amplitudes live at the low indices, new qubits are clear.
  CHECK(reg.amplitude(1) == Complex(1.0, 0.0));
  CHECK(reg.norm() == doctest::Approx(1.0).epsilon(1e-15));
  auto full = qc::QuantumRegister::basis_state(8, 0);
  CHECK_THROWS_AS(full.attach_ancilla(1), qc::CapacityError);
}

TEST_CASE("rotations compose additively and invert exactly") {
  qc::RandomSource rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rng.angle();
    const double b = rng.angle();
    auto one = random_state(1, rng);
    auto two = one;
    qc::apply_gate(one, 0, qc::RotationGate(a));
    qc::apply_gate(one, 0, qc::RotationGate(b));
    qc::apply_gate(two, 0, qc::RotationGate(a + b));
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(one.amplitude(i) - two.amplitude(i)) < qc::kAlgebraTol);
    }
    // Round trip through the inverse restores the state to working
    // precision even after a compose.
    qc::apply_gate(one, 0, qc::RotationGate(a + b).inverse());
    auto base = two;
    qc::apply_gate(base, 0, qc::RotationGate(a + b).inverse());
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(one.amplitude(i) - base.amplitude(i)) < qc::kAlgebraTol);
    }
  }
}

TEST_CASE("apply_gate matches the dense oracle on every qubit") {
  qc::RandomSource rng(202);
  for (int qubit = 0; qubit < 3; ++qubit) {
    auto reg = random_state(3, rng);
    const std::vector<Complex> before(reg.amplitudes().begin(),
                                      reg.amplitudes().end());
    const double theta = rng.angle();
    const qc::RotationGate gate(theta);
    qc::apply_gate(reg, qubit, gate);
    const auto m = gate.matrix();
    const auto expected = dense_apply(
        before, qubit,
        {Complex(m[0]), Complex(m[1]), Complex(m[2]), Complex(m[3])});
    CHECK(max_amp_diff(reg, expected) < qc::kAlgebraTol);
    CHECK(reg.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  auto reg = random_state(2, rng);
  CHECK_THROWS(qc::apply_gate(reg, 2, qc::RotationGate(0.1)));
  CHECK_THROWS(qc::apply_gate(reg, -1, qc::RotationGate(0.1)));
}

TEST_CASE("paulis match their matrices") {
  const Complex i(0.0, 1.0);
  const std::array<Complex, 4> x = {0, 1, 1, 0};
  const std::array<Complex, 4> y = {0, -i, i, 0};
  const std::array<Complex, 4> z = {1, 0, 0, -1};
  qc::RandomSource rng(303);
  const std::array<std::pair<qc::Pauli, std::array<Complex, 4>>, 3> table = {
      {{qc::Pauli::kX, x}, {qc::Pauli::kY, y}, {qc::Pauli::kZ, z}}};
  for (const auto& [pauli, matrix] : table) {
    auto reg = random_state(2, rng);
    const std::vector<Complex> before(reg.amplitudes().begin(),
                                      reg.amplitudes().end());
    qc::apply_pauli(reg, 1, pauli);
    CHECK(max_amp_diff(reg, dense_apply(before, 1, matrix)) < qc::kAlgebraTol);
  }
}

TEST_CASE("minting identity: R(theta + bit*pi/2)|0> = R(theta)|bit>") {
  qc::RandomSource rng(404);
  for (int bit = 0; bit < 2; ++bit) {
    for (int trial = 0; trial < 20; ++trial) {
      const double theta = rng.angle();
      auto minted = qc::QuantumRegister::basis_state(1, 0);
      qc::apply_gate(minted, 0,
                     qc::RotationGate(theta + bit * std::numbers::pi / 2.0));
      auto direct = qc::QuantumRegister::basis_state(1, bit);
      qc::apply_gate(direct, 0, qc::RotationGate(theta));
      for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(minted.amplitude(i) - direct.amplitude(i)) <
              qc::kAlgebraTol);
      }
    }
  }
}

TEST_CASE("outcome probabilities are Born exact") {
  qc::RandomSource rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const double state_angle = rng.angle();
    const double basis = rng.angle();
    auto reg = qc::QuantumRegister::basis_state(1, 0);
    qc::apply_gate(reg, 0, qc::RotationGate(state_angle));
    const double delta = state_angle - basis;
    const double c = std::cos(delta);
    CHECK(qc::outcome_probability(reg, 0, basis, 0) ==
          doctest::Approx(c * c).epsilon(1e-12));
    const double p0 = qc::outcome_probability(reg, 0, basis, 0);
    const double p1 = qc::outcome_probability(reg, 0, basis, 1);
    CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement collapses, repeats, and samples the Born rule") {
  qc::RandomSource rng(606);
  // Repeat measurement in the same basis is deterministic after collapse.
  for (int trial = 0; trial < 30; ++trial) {
    auto reg = random_state(1, rng);
    const double basis = rng.angle();
    const auto first = qc::measure(reg, 0, basis, rng);
    CHECK(reg.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const auto again = qc::measure(reg, 0, basis, rng);
    CHECK(again.outcome == first.outcome);
    CHECK(again.probability_of_outcome == doctest::Approx(1.0).epsilon(1e-10));
  }
  // Sampled frequency tracks outcome_probability. 0.5849835 is
  // cos^2(0.7); tolerance is 4 standard errors at this sample size.
  const double expected = std::cos(0.7) * std::cos(0.7);
  int zeros = 0;
  const int samples = 20000;
  for (int s = 0; s < samples; ++s) {
    auto reg = qc::QuantumRegister::basis_state(1, 0);
    qc::apply_gate(reg, 0, qc::RotationGate(0.7));
    if (qc::measure(reg, 0, 0.0, rng).outcome == 0) ++zeros;
  }
  const double se = std::sqrt(expected * (1.0 - expected) / samples);
  CHECK(std::abs(static_cast<double>(zeros) / samples - expected) < 4.0 * se);
  // Collapse in a two-qubit register leaves the partner qubit normalized.
  auto pair = random_state(2, rng);
  qc::measure(pair, 0, 0.3, rng);
  CHECK(pair.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cloning isometry has the fixed two-basis expansion") {
  const double w_keep = std::sqrt(2.0 / 3.0);
  const double w_mix = std::sqrt(1.0 / 6.0);

  // Input |0>: amplitude w_keep on |000> plus w_mix on the symmetrized
  // originals with the machine flipped. Qubit order after the call is
  // (original=0, clone=1, machine=2), so those terms sit at indices 5 and 6.
  auto zero = qc::QuantumRegister::basis_state(1, 0);
  const auto h0 = qc::uqcm_clone(zero, 0);
  CHECK(h0.clone_qubit == 1);
  CHECK(h0.machine_qubit == 2);
  CHECK(std::abs(zero.amplitude(0) - Complex(w_keep)) < qc::kAlgebraTol);
  CHECK(std::abs(zero.amplitude(5) - Complex(w_mix)) < qc::kAlgebraTol);
  CHECK(std::abs(zero.amplitude(6) - Complex(w_mix)) < qc::kAlgebraTol);
  for (const std::uint64_t idx : {1, 2, 3, 4, 7}) {
    CHECK(std::abs(zero.amplitude(idx)) < qc::kAlgebraTol);
  }

  auto one = qc::QuantumRegister::basis_state(1, 1);
  qc::uqcm_clone(one, 0);
  CHECK(std::abs(one.amplitude(7) - Complex(w_keep)) < qc::kAlgebraTol);
  CHECK(std::abs(one.amplitude(1) - Complex(w_mix)) < qc::kAlgebraTol);
  CHECK(std::abs(one.amplitude(2) - Complex(w_mix)) < qc::kAlgebraTol);

  // Linearity: the clone of a superposition is the same superposition of
  // the two frozen basis images.
  qc::RandomSource rng(707);
  for (int trial = 0; trial < 25; ++trial) {
    auto psi = random_state(1, rng);
    const Complex alpha = psi.amplitude(0);
    const Complex beta = psi.amplitude(1);
    qc::uqcm_clone(psi, 0);
    std::vector<Complex> expected(8, Complex(0.0));
    expected[0] = alpha * w_keep;
    expected[5] = alpha * w_mix;
    expected[6] = alpha * w_mix;
    expected[7] = beta * w_keep;
    expected[1] = beta * w_mix;
    expected[2] = beta * w_mix;
    CHECK(max_amp_diff(psi, expected) < qc::kAlgebraTol);
    // Original and clone slots are exchange-symmetric.
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
      const std::uint64_t swapped =
          (idx & ~std::uint64_t{3}) | ((idx & 1) << 1) | ((idx >> 1) & 1);
      CHECK(std::abs(psi.amplitude(idx) - psi.amplitude(swapped)) <
            qc::kAlgebraTol);
    }
  }
}

TEST_CASE("clone marginals shrink every pure input to fidelity 5/6") {
  qc::RandomSource rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    auto psi = random_state(1, rng);
    const Eigen::Vector2cd input = to_eigen(psi);
    const auto handles = qc::uqcm_clone(psi, 0);

    const auto clone_rho = qc::partial_trace(psi, {handles.clone_qubit});
    const auto orig_rho = qc::partial_trace(psi, {0});
    CHECK(clone_rho.is_physical());
    // Symmetric cloner: both output marginals are the same state.
    CHECK(qc::trace_distance(clone_rho, orig_rho) < qc::kNumericTol);

    // Independent fidelity: <psi|rho|psi> computed directly.
    const double direct =
        std::real((input.adjoint() * clone_rho.matrix() * input)(0, 0));
    CHECK(direct == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
    auto pure = qc::QuantumRegister::basis_state(1, 0);
    pure.mutable_amplitudes()[0] = input(0);
    pure.mutable_amplitudes()[1] = input(1);
    CHECK(qc::fidelity(clone_rho, pure) ==
          doctest::Approx(direct).epsilon(1e-12));

    // The shrink map fixes the marginal spectrum at {5/6, 1/6} for every
    // pure input; this is basis independent.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(clone_rho.matrix());
    CHECK(solver.eigenvalues()(0) == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(solver.eigenvalues()(1) == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
  }
}

TEST_CASE("cloning indexes correctly inside a larger register") {
  qc::RandomSource rng(909);
  const double a = rng.angle();
  const double b = rng.angle();
  auto reg = qc::QuantumRegister::basis_state(2, 0);
  qc::apply_gate(reg, 0, qc::RotationGate(a));
  qc::apply_gate(reg, 1, qc::RotationGate(b));
  const auto handles = qc::uqcm_clone(reg, 1);
  CHECK(reg.num_qubits() == 4);
  // Bystander qubit 0 is untouched and stays pure.
  const auto bystander = qc::partial_trace(reg, {0});
  auto pure_a = qc::QuantumRegister::basis_state(1, 0);
  qc::apply_gate(pure_a, 0, qc::RotationGate(a));
  CHECK(qc::fidelity(bystander, pure_a) == doctest::Approx(1.0).epsilon(1e-10));
  // The cloned qubit's marginal shrinks as usual.
  auto pure_b = qc::QuantumRegister::basis_state(1, 0);
  qc::apply_gate(pure_b, 0, qc::RotationGate(b));
  CHECK(qc::fidelity(qc::partial_trace(reg, {handles.clone_qubit}), pure_b) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("cloning respects register capacity") {
  auto reg = qc::QuantumRegister::basis_state(7, 0);
  CHECK_THROWS_AS(qc::uqcm_clone(reg, 0), qc::CapacityError);
  auto ok = qc::QuantumRegister::basis_state(6, 0);
  CHECK_NOTHROW(qc::uqcm_clone(ok, 0));
  auto small = qc::QuantumRegister::basis_state(1, 0);
  CHECK_THROWS(qc::uqcm_clone(small, 1));
}

TEST_CASE("partial trace factors product states") {
  qc::RandomSource rng(1010);
  const double a = rng.angle();
  const double b = rng.angle();
  auto reg = qc::QuantumRegister::basis_state(2, 1);
  qc::apply_gate(reg, 0, qc::RotationGate(a));
  qc::apply_gate(reg, 1, qc::RotationGate(b));
  // Qubit 0 carries R(a)|1>, qubit 1 carries R(b)|0>.
  auto r1 = qc::QuantumRegister::basis_state(1, 1);
  qc::apply_gate(r1, 0, qc::RotationGate(a));
  auto r0 = qc::QuantumRegister::basis_state(1, 0);
  qc::apply_gate(r0, 0, qc::RotationGate(b));
  CHECK(qc::fidelity(qc::partial_trace(reg, {0}), r1) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(qc::fidelity(qc::partial_trace(reg, {1}), r0) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // Two kept qubits give the full 4x4 product operator with unit purity.
  const auto joint = qc::partial_trace(reg, {0, 1});
  CHECK(joint.dim() == 4);
  CHECK(std::abs((joint.matrix() * joint.matrix()).trace() - 1.0) < 1e-10);
  CHECK_THROWS(qc::partial_trace(reg, {0, 1, 2}));
  CHECK_THROWS(qc::partial_trace(reg, {5}));
  CHECK_THROWS(qc::partial_trace(reg, std::vector<int>{}));
}

TEST_CASE("depolarize endpoints and rotation covariance") {
  auto reg = qc::QuantumRegister::basis_state(1, 0);
  const auto rho = qc::partial_trace(reg, {0});
  const auto same = qc::depolarize(rho, 0.0);
  CHECK(qc::trace_distance(same, rho) < 1e-12);
  const auto mixed = qc::depolarize(rho, 1.0);
  CHECK(qc::trace_distance(mixed, qc::DensityOperator::maximally_mixed(2)) <
        1e-12);
  const auto part = qc::depolarize(rho, 0.3);
  CHECK(std::real(part.matrix()(0, 0)) == doctest::Approx(0.85).epsilon(1e-12));
  CHECK(std::real(part.matrix()(1, 1)) == doctest::Approx(0.15).epsilon(1e-12));
  CHECK_THROWS(qc::depolarize(rho, -0.1));
  CHECK_THROWS(qc::depolarize(rho, 1.1));

  // The channel commutes with every rotation, which is what makes the
  // in-session noise placement unambiguous.
  qc::RandomSource rng(1111);
  for (int trial = 0; trial < 10; ++trial) {
    const double theta = rng.angle();
    const double p = rng.uniform();
    auto state = random_state(1, rng);
    auto rotated = state;
    qc::apply_gate(rotated, 0, qc::RotationGate(theta));
    const auto depol_then_rotate = [&] {
      const auto m = qc::RotationGate(theta).matrix();
      Eigen::Matrix2cd u;
      u << m[0], m[1], m[2], m[3];
      const auto noisy = qc::depolarize(qc::partial_trace(state, {0}), p);
      return qc::DensityOperator(u * noisy.matrix() * u.adjoint());
    }();
    const auto rotate_then_depol =
        qc::depolarize(qc::partial_trace(rotated, {0}), p);
    CHECK(qc::trace_distance(depol_then_rotate, rotate_then_depol) < 1e-10);
  }
}

TEST_CASE("trace distance endpoints") {
  auto zero = qc::QuantumRegister::basis_state(1, 0);
  auto one = qc::QuantumRegister::basis_state(1, 1);
  const auto rho0 = qc::partial_trace(zero, {0});
  const auto rho1 = qc::partial_trace(one, {0});
  CHECK(qc::trace_distance(rho0, rho0) < 1e-12);
  CHECK(qc::trace_distance(rho0, rho1) == doctest::Approx(1.0).epsilon(1e-12));
  // Any pure state sits at distance exactly 1/2 from the maximally mixed
  // state.
  qc::RandomSource rng(1212);
  for (int trial = 0; trial < 10; ++trial) {
    auto psi = random_state(1, rng);
    CHECK(qc::trace_distance(qc::partial_trace(psi, {0}),
                             qc::DensityOperator::maximally_mixed(2)) ==
          doctest::Approx(0.5).epsilon(1e-10));
  }
}

TEST_CASE("random source is deterministic and well ranged") {
  qc::RandomSource a(12345);
  qc::RandomSource b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  qc::RandomSource c(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const int k = c.uniform_int(7);
    CHECK(k >= 0);
    CHECK(k < 7);
    const int coin = c.coin();
    CHECK((coin == 0 || coin == 1));
    const double ang = c.angle();
    CHECK(ang >= 0.0);
    CHECK(ang < 2.0 * std::numbers::pi);
  }

  // Derived streams with different tags or indices decorrelate.
  CHECK(qc::derive_stream(1, 0, 0) != qc::derive_stream(1, 1, 0));
  CHECK(qc::derive_stream(1, 0, 0) != qc::derive_stream(1, 0, 1));
  CHECK(qc::derive_stream(1, 0, 0) != qc::derive_stream(2, 0, 0));
  CHECK(qc::derive_seed(9, 4) == qc::derive_seed(9, 4));
  qc::RandomSource s1 = qc::RandomSource::for_session(7, 0);
  qc::RandomSource s2 = qc::RandomSource::for_session(7, 1);
  CHECK(s1.next_u64() != s2.next_u64());
}
