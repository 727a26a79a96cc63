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

#include <string>

#include "qpadlock/qcore/random.hpp"

namespace qpadlock::protocol {

/// Law for drawing one secret padlock angle.
///
/// Continuous uniform covers [0, 2*pi). Discrete uniform with k levels draws
/// from {j*pi/k : j = 0..k-1}; spacing pi/k rather than 2*pi/k because
/// R(theta + pi) = -R(theta) acts identically on every state, so a 2*pi/k
/// grid would duplicate rotations instead of adding key entropy. k = 1
/// degenerates to the always-zero angle (no encryption), which is useful as
/// a worst case in distinguishability studies.
class AngleDistribution {
 public:
  enum class Kind { kContinuousUniform, kDiscreteUniform };

  static AngleDistribution continuous_uniform();
  /// Throws std::invalid_argument for levels < 1.
  static AngleDistribution discrete_uniform(int levels);

  Kind kind() const { return kind_; }
  /// Level count; meaningful only for discrete.
  int levels() const { return levels_; }

  double sample(qcore::RandomSource& rng) const;

  /// Stable text form, "continuous" or "discrete:<k>". Used in config
  /// hashing and serialized summaries.
  std::string describe() const;
  static AngleDistribution parse(const std::string& text);

 private:
  AngleDistribution(Kind kind, int levels) : kind_(kind), levels_(levels) {}

  Kind kind_;
  int levels_;
};

/// Per-session protocol parameters. Pass count is implied: 2n+1.
struct SessionConfig {
  int padlocks_per_party = 1;
  int repetition_factor = 1;
  double channel_depolarize_p = 0.0;
  AngleDistribution angle_distribution = AngleDistribution::continuous_uniform();

  int pass_count() const;

  /// Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

}  // namespace qpadlock::protocol
