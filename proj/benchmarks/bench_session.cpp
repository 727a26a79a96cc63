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

#include <benchmark/benchmark.h>

#include "qpadlock/adversary/strategies.hpp"
#include "qpadlock/protocol/session.hpp"
#include "qpadlock/qcore/random.hpp"

namespace {

using qpadlock::protocol::SessionConfig;
using qpadlock::qcore::RandomSource;

void BM_HonestSession(benchmark::State& state) {
  SessionConfig config;
  config.padlocks_per_party = static_cast<int>(state.range(0));
  const auto strategy = qpadlock::adversary::no_attack();
  RandomSource rng(3);
  std::uint64_t index = 0;
  for (auto _ : state) {
    const auto transcript = qpadlock::protocol::run_session(
        config, static_cast<int>(index & 1), *strategy, {1, index}, rng);
    benchmark::DoNotOptimize(transcript.bob_outcome);
    ++index;
  }
}
BENCHMARK(BM_HonestSession)->Arg(1)->Arg(2)->Arg(3);

void BM_InterceptSession(benchmark::State& state) {
  SessionConfig config;
  const auto strategy = qpadlock::adversary::intercept_resend(
      qpadlock::adversary::BasisPolicy::uniform_random(), {1});
  RandomSource rng(5);
  std::uint64_t index = 0;
  for (auto _ : state) {
    const auto transcript = qpadlock::protocol::run_session(
        config, static_cast<int>(index & 1), *strategy, {1, index}, rng);
    benchmark::DoNotOptimize(transcript.bob_outcome);
    ++index;
  }
}
BENCHMARK(BM_InterceptSession);

void BM_CloneSession(benchmark::State& state) {
  SessionConfig config;
  const auto strategy = qpadlock::adversary::clone_attack(
      {1}, qpadlock::adversary::CloneMeasurement::kComputational);
  RandomSource rng(9);
  std::uint64_t index = 0;
  for (auto _ : state) {
    const auto transcript = qpadlock::protocol::run_session(
        config, static_cast<int>(index & 1), *strategy, {1, index}, rng);
    benchmark::DoNotOptimize(transcript.bob_outcome);
    ++index;
  }
}
BENCHMARK(BM_CloneSession);

}  // namespace
