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
#include <utility>
#include <vector>

#include "qpadlock/protocol/transcript.hpp"

namespace qpadlock::analysis {

/// A Bernoulli rate with its Wilson 95% interval and the raw counts it
/// came from. ci_low <= rate <= ci_high always holds.
struct RateEstimate {
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

/// Wilson score interval at 95% (z = 1.959963984540054). Chosen over the
/// normal approximation because several tracked rates sit exactly at 0.
/// Throws std::invalid_argument for trials = 0 or successes > trials.
RateEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Fraction of non-aborted sessions where Bob decoded the wrong bit.
/// Throws std::invalid_argument when no non-aborted transcript exists.
RateEstimate qber(const std::vector<protocol::SessionTranscript>& transcripts);

/// Fraction of non-aborted sessions where the adversary's guess matched
/// the key bit. Throws std::invalid_argument when no session carries a
/// guess.
RateEstimate eve_accuracy(
    const std::vector<protocol::SessionTranscript>& transcripts);

/// Wilson-wrapped repetition mismatch: consecutive blocks of r transcripts
/// form one logical bit; a block whose copies do not all agree (or that
/// contains an abort) counts as mismatched. The rate equals
/// protocol::repetition_check on the same input.
RateEstimate mismatch_rate(
    const std::vector<protocol::SessionTranscript>& transcripts, int r);

/// Plug-in mutual information in bits with the Miller-Madow bias
/// correction (observed-support variant), clamped at 0. Throws
/// std::invalid_argument on length mismatch, empty input, or an observed
/// alphabet above 64 symbols on either side.
double mutual_information_bits(const std::vector<int>& xs,
                               const std::vector<int>& ys);

/// (eve symbol, key bit) sample pairs from non-aborted transcripts. The
/// symbol packs the adversary's recorded measurement outcomes in record
/// order, little-endian, capped at 6 bits so the MI alphabet bound holds.
std::pair<std::vector<int>, std::vector<int>> eve_symbol_samples(
    const std::vector<protocol::SessionTranscript>& transcripts);

}  // namespace qpadlock::analysis
