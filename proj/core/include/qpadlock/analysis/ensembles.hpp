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

#include <cstdint>

#include "qpadlock/protocol/config.hpp"
#include "qpadlock/qcore/random.hpp"

namespace qpadlock::analysis {

/// Best cloning fidelity after `exchanges` cloned wire trips under the
/// multiplicative per-trip optimum: (5/6)^exchanges. Strictly decreasing;
/// equals 5/6 at one exchange. Throws std::invalid_argument for
/// exchanges < 1.
double fidelity_budget(int exchanges);

/// Trace distance between the bit-conditional averaged wire states at the
/// given pass, Monte Carlo over `samples` fresh key draws (both bit values
/// share each draw). Uses the closed form of the honest wire state: the
/// schedule's net rotation applied to |bit>, shrunk by (1-p) once per
/// completed pass. The analytic value for uniform keys is 0; the estimate
/// decays as O(1/sqrt(samples)).
///
/// Throws std::invalid_argument for an invalid pass index or
/// samples < 1000 (below that the estimate is mostly noise).
double ensemble_distinguishability(int pass_index,
                                   const protocol::SessionConfig& config,
                                   std::uint64_t samples,
                                   qcore::RandomSource& rng);

}  // namespace qpadlock::analysis
