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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "qpadlock/protocol/classical.hpp"
#include "qpadlock/qcore/random.hpp"

namespace {

void BM_ThreePassRoundTrip(benchmark::State& state) {
  const auto words = static_cast<std::size_t>(state.range(0));
  qpadlock::qcore::RandomSource rng(17);
  std::vector<std::uint32_t> message(words);
  for (auto& word : message) {
    word = static_cast<std::uint32_t>(rng.next_u64() & 0xFFu);
  }
  for (auto _ : state) {
    const auto sequences = qpadlock::protocol::three_pass_run(message, 8, rng);
    const auto recovered = qpadlock::protocol::three_pass_break(sequences);
    benchmark::DoNotOptimize(recovered.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(words));
}
BENCHMARK(BM_ThreePassRoundTrip)->Arg(256)->Arg(4096);

}  // namespace
