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
#include <optional>
#include <string>
#include <vector>

#include "qpadlock/protocol/schedule.hpp"

namespace qpadlock::protocol {

/// One wire trip as observed by the transcript. Carries pass bookkeeping
/// and the adversary's action tag only; wire events never carry state
/// amplitudes and never carry key angles.
struct PassEvent {
  int pass_index = 0;
  Direction direction = Direction::kAliceToBob;
  /// "none" for an untouched pass, else the comma-joined toolbox actions
  /// the adversary took on it.
  std::string adversary_action_tag = "none";
  /// Global clock tick; strictly increasing over a session's events.
  int timestamp_index = 0;
};

/// One adversary toolbox action. Contains only data the adversary
/// legitimately owns: her own chosen bases, her observed outcomes, and
/// opaque handles to qubits she kept. Nothing here can encode amplitudes.
struct EveActionRecord {
  int pass_index = 0;
  std::string action;
  std::optional<int> outcome;
  std::optional<double> basis_angle;
  std::optional<int> stored_handle;
};

/// Everything the adversary walks away with, plus her final guess.
/// guess is -1 when the session aborted before finalize.
struct EveTrace {
  std::vector<EveActionRecord> records;
  int guess = -1;
  double confidence = 0.0;
};

/// Complete per-bit record of one protocol session. This is the audit
/// surface: serialization covers exactly these fields, and padlock angles
/// have no path into any of them.
struct SessionTranscript {
  std::uint64_t session_id = 0;
  int n = 1;
  int repetition_factor = 1;
  int bit = 0;
  std::vector<PassEvent> events;
  /// Bob's decoded bit; -1 when the session aborted.
  int bob_outcome = -1;
  bool aborted = false;
  /// Empty for a clean run, else the violation message.
  std::string abort_reason;
  std::uint64_t master_seed = 0;
  std::uint64_t session_index = 0;
  EveTrace eve;
};

/// Stable wire forms, "alice_to_bob" and "bob_to_alice".
std::string direction_name(Direction d);
Direction parse_direction(const std::string& name);

}  // namespace qpadlock::protocol
