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

#include "qpadlock/protocol/classical.hpp"

#include <stdexcept>

namespace qpadlock::protocol {

namespace {

std::uint32_t word_mask(int width) { return (width == 32) ? 0xffffffffu : ((1u << width) - 1u); }

}  // namespace

ThreePassSequences three_pass_run(const std::vector<std::uint32_t>& message,
                                  int width, qcore::RandomSource& rng) {
  if (width < 1 || width > 32) {
    throw std::invalid_argument("word width must be in [1, 32]");
  }
  const std::uint32_t mask = word_mask(width);
  for (const auto m : message) {
    if ((m & ~mask) != 0) {
      throw std::invalid_argument("message word exceeds 2^width - 1");
    }
  }

  ThreePassSequences out;
  out.width = width;
  out.seq1.reserve(message.size());
  out.seq2.reserve(message.size());
  out.seq3.reserve(message.size());
  for (const auto m : message) {
    const std::uint32_t a = static_cast<std::uint32_t>(rng.next_u64()) & mask;
    const std::uint32_t b = static_cast<std::uint32_t>(rng.next_u64()) & mask;
    out.seq1.push_back((m + a) & mask);
    out.seq2.push_back((m + a + b) & mask);
    out.seq3.push_back((m + b) & mask);
  }
  return out;
}

std::vector<std::uint32_t> three_pass_break(const ThreePassSequences& seqs) {
  if (seqs.seq1.size() != seqs.seq2.size() ||
      seqs.seq2.size() != seqs.seq3.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  const std::uint32_t mask = word_mask(seqs.width);
  std::vector<std::uint32_t> message;
  message.reserve(seqs.seq1.size());
  for (std::size_t i = 0; i < seqs.seq1.size(); ++i) {
    const std::uint32_t b = (seqs.seq2[i] - seqs.seq1[i]) & mask;
    message.push_back((seqs.seq3[i] - b) & mask);
  }
  return message;
}

}  // namespace qpadlock::protocol
