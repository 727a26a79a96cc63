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
#include <vector>

#include "qpadlock/qcore/random.hpp"

namespace qpadlock::protocol {

/// The classical analogue of the padlock exchange, over the group of
/// addition modulo 2^width. Included as the negative control: unlike the
/// quantum wire, these three public sequences leak everything.
///
/// Per word: seq1 = m + A, seq2 = m + A + B, seq3 = m + B, with A and B
/// fresh uniform keys. Addition is the demo group on purpose; with XOR the
/// break is even shorter (seq1 ^ seq2 ^ seq3 = m directly).
struct ThreePassSequences {
  int width = 8;
  std::vector<std::uint32_t> seq1;
  std::vector<std::uint32_t> seq2;
  std::vector<std::uint32_t> seq3;
};

/// Runs the cipher over `message`. Words must be in [0, 2^width); width in
/// [1, 32]. Throws std::invalid_argument otherwise.
ThreePassSequences three_pass_run(const std::vector<std::uint32_t>& message,
                                  int width, qcore::RandomSource& rng);

/// The passive wiretap break: B = seq2 - seq1, m = seq3 - B per word.
/// Recovers the full message from the public sequences alone. Throws
/// std::invalid_argument on length mismatch.
std::vector<std::uint32_t> three_pass_break(const ThreePassSequences& seqs);

}  // namespace qpadlock::protocol
