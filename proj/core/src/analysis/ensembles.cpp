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

#include "qpadlock/analysis/ensembles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpadlock/protocol/schedule.hpp"

namespace qpadlock::analysis {

double fidelity_budget(int exchanges) {
  if (exchanges < 1) throw std::invalid_argument("exchanges must be >= 1");
  return std::pow(5.0 / 6.0, static_cast<double>(exchanges));
}

double ensemble_distinguishability(int pass_index,
                                   const protocol::SessionConfig& config,
                                   std::uint64_t samples,
                                   qcore::RandomSource& rng) {
  config.validate();
  const int total_passes = config.pass_count();
  if (pass_index < 1 || pass_index > total_passes) {
    throw std::invalid_argument("pass index outside 1..2n+1");
  }
  if (samples < 1000) {
    throw std::invalid_argument("need at least 1000 samples");
  }

  // signed multiplicity of each padlock angle in the wire state at this
  // pass, read off the schedule
  const int n = config.padlocks_per_party;
  std::vector<double> coeff_alice(static_cast<std::size_t>(n), 0.0);
  std::vector<double> coeff_bob(static_cast<std::size_t>(n), 0.0);
  for (const auto& pass : protocol::schedule_passes(n)) {
    if (pass.pass_index > pass_index) break;
    for (const auto& action : pass.actions) {
      auto& coeff = action.owner == protocol::Party::kAlice
                        ? coeff_alice[static_cast<std::size_t>(action.padlock_index)]
                        : coeff_bob[static_cast<std::size_t>(action.padlock_index)];
      coeff += action.op == protocol::PadlockOp::kApply ? 1.0 : -1.0;
    }
  }

  const double shrink =
      std::pow(1.0 - config.channel_depolarize_p, static_cast<double>(pass_index));

  // averaged 2x2 conditionals are real symmetric; accumulate the three
  // independent entries per bit value, both bits sharing each key draw
  double m0_00 = 0.0, m0_01 = 0.0, m0_11 = 0.0;
  double m1_00 = 0.0, m1_01 = 0.0, m1_11 = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double net = 0.0;
    for (int i = 0; i < n; ++i) {
      net += coeff_alice[static_cast<std::size_t>(i)] *
             config.angle_distribution.sample(rng);
    }
    for (int i = 0; i < n; ++i) {
      net += coeff_bob[static_cast<std::size_t>(i)] *
             config.angle_distribution.sample(rng);
    }
    const double c = std::cos(net);
    const double sn = std::sin(net);
    // R(net)|0> = (c, sn), R(net)|1> = (-sn, c), shrunk toward I/2
    m0_00 += shrink * c * c + (1.0 - shrink) * 0.5;
    m0_01 += shrink * c * sn;
    m0_11 += shrink * sn * sn + (1.0 - shrink) * 0.5;
    m1_00 += shrink * sn * sn + (1.0 - shrink) * 0.5;
    m1_01 += shrink * (-sn * c);
    m1_11 += shrink * c * c + (1.0 - shrink) * 0.5;
  }
  const double inv = 1.0 / static_cast<double>(samples);

  // trace distance of two real symmetric 2x2 operators, in closed form
  const double d00 = (m0_00 - m1_00) * inv;
  const double d01 = (m0_01 - m1_01) * inv;
  const double d11 = (m0_11 - m1_11) * inv;
  const double tr = d00 + d11;
  const double disc = std::sqrt((d00 - d11) * (d00 - d11) + 4.0 * d01 * d01);
  const double lam1 = 0.5 * (tr + disc);
  const double lam2 = 0.5 * (tr - disc);
  return 0.5 * (std::abs(lam1) + std::abs(lam2));
}

}  // namespace qpadlock::analysis
