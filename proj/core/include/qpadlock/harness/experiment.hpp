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
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpadlock/adversary/strategy.hpp"
#include "qpadlock/analysis/summary.hpp"
#include "qpadlock/protocol/config.hpp"
#include "qpadlock/protocol/transcript.hpp"

namespace qpadlock::harness {

/// Domain tags for derived random streams. Fixed forever: changing any of
/// these would silently change every output byte.
inline constexpr std::uint64_t kStreamSession = 0;
inline constexpr std::uint64_t kStreamBit = 1;
inline constexpr std::uint64_t kStreamDistinguishability = 2;
inline constexpr std::uint64_t kStreamClassical = 3;

/// Bad configuration as opposed to a failure while running; the CLI maps
/// this to exit code 1 and everything else unexpected to 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adversary selection by name plus parameters. Unset fields take the
/// strategy's defaults (passes {1}, uniform random basis, computational
/// clone measurement).
struct StrategySpec {
  std::string name = "no_attack";
  std::set<int> passes;
  /// "uniform" or a fixed angle in radians rendered as a number.
  std::string basis = "uniform";
  /// "computational" or "defer".
  std::string clone_measurement = "computational";

  /// Compact CLI form: "name" or "name:1,2,3" (pass list after the colon).
  static StrategySpec parse(const std::string& text);
};

/// Everything a run needs. The master seed is always explicit; there is no
/// wall-clock fallback anywhere, so a config fully determines every output
/// byte.
struct ExperimentConfig {
  protocol::SessionConfig session;
  std::uint64_t sessions = 10000;
  StrategySpec strategy;
  std::uint64_t master_seed = 1;
  std::string out_dir = "out";
  int workers = 1;
  /// "csv" or "json"; selects what `run` prints to stdout. All output
  /// files are written regardless.
  std::string format = "csv";

  /// Throws ConfigError on out-of-range fields, including a session count
  /// that is not a multiple of the repetition factor.
  void validate() const;
  /// Canonical one-line text form; hashed into summaries.
  std::string canonical() const;
};

/// Loads a JSON config file; missing fields keep their defaults. Throws
/// ConfigError on parse errors or unknown keys.
ExperimentConfig load_config(const std::string& path);

/// Fresh per-session strategy instance. Throws ConfigError for an unknown
/// name (the message lists the known strategies) or bad parameters.
std::unique_ptr<adversary::AttackStrategy> build_strategy(
    const StrategySpec& spec);

/// Runs config.sessions independent sessions across config.workers
/// threads and aggregates. Session i draws its bit from the per-group
/// stream (i/r) and its randomness from the per-session stream (i), so
/// results are identical for any worker count. Transcripts are returned in
/// session order when `transcripts_out` is given.
analysis::ExperimentSummary run_experiment(
    const ExperimentConfig& config,
    std::vector<protocol::SessionTranscript>* transcripts_out = nullptr);

/// Writes transcripts.jsonl, summary.csv, and summary.json under
/// config.out_dir, creating the directory if needed.
void write_outputs(const ExperimentConfig& config,
                   const analysis::ExperimentSummary& summary,
                   const std::vector<protocol::SessionTranscript>& transcripts);

/// Transcript-only reaggregation used by `report`: recomputes every rate
/// that the transcripts can support; distinguishability stays empty
/// because transcripts carry no key-distribution information.
analysis::ExperimentSummary summarize_transcripts(
    const std::vector<protocol::SessionTranscript>& transcripts,
    const std::string& strategy_name);

}  // namespace qpadlock::harness
