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

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "qpadlock/adversary/strategy.hpp"

namespace qpadlock::adversary {

/// Baseline: forwards every token untouched; the final guess is a fair
/// coin. Contributes zero disturbance and zero information.
std::unique_ptr<AttackStrategy> no_attack();

/// How intercept_resend picks its measurement basis.
struct BasisPolicy {
  /// Fixed angle phi on every intercepted pass.
  static BasisPolicy fixed(double phi);
  /// Fresh uniform angle in [0, 2*pi) per intercepted pass.
  static BasisPolicy uniform_random();

  bool is_fixed = false;
  double phi = 0.0;
};

/// Measure-and-replace on each listed pass: measures the in-flight qubit
/// at the policy basis, keeps the collapsed original, and forwards a fresh
/// qubit prepared in the observed basis state. Physically legal; detection
/// is statistical, through the disturbance it causes.
///
/// Throws std::invalid_argument for an empty pass set or pass indices < 1.
std::unique_ptr<AttackStrategy> intercept_resend(BasisPolicy policy,
                                                 std::set<int> passes);

/// What clone_attack does with its kept clones at finalize.
enum class CloneMeasurement {
  /// Measure each kept clone in the computational basis and majority-vote
  /// the guess (ties go to a coin flip).
  kComputational,
  /// Keep the clones unmeasured for external estimators; guess is a coin.
  kDefer,
};

/// Runs the universal cloning machine on each listed pass, keeping one
/// clone and the machine qubit while the other clone flies on. At most 3
/// passes fit the register budget.
///
/// Throws std::invalid_argument for an empty set, pass indices < 1, or
/// more than 3 passes.
std::unique_ptr<AttackStrategy> clone_attack(std::set<int> passes,
                                             CloneMeasurement measurement);

/// Channel-terminating impersonation: Eve runs a complete honest protocol
/// with Alice while playing the receiver, learns the bit, then runs a
/// complete honest protocol with Bob while playing the sender. Neither
/// honest party sees a single error, and the repetition check stays
/// silent; the strategy exists to demonstrate that the wire discipline
/// alone cannot authenticate the far end.
std::unique_ptr<AttackStrategy> full_mitm();

}  // namespace qpadlock::adversary
