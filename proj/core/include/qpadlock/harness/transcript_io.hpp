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
#include <vector>

#include "qpadlock/protocol/transcript.hpp"

namespace qpadlock::harness {

/// One transcript as one compact JSON object (no trailing newline).
/// The field set is fixed: session_id, n, r, bit, events[] (pass_index,
/// direction, adversary_action_tag, timestamp_index), bob_outcome,
/// aborted, abort_reason, master_seed, session_index, eve (records[],
/// guess, confidence). Nothing else ever appears, which is what the
/// key-secrecy audit pins.
std::string to_jsonl_line(const protocol::SessionTranscript& transcript);

/// Inverse of to_jsonl_line. Throws std::invalid_argument on malformed
/// input.
protocol::SessionTranscript from_jsonl_line(const std::string& line);

/// Whole-file helpers; one transcript per line. Throw std::runtime_error
/// on I/O failure.
void write_transcripts(
    const std::string& path,
    const std::vector<protocol::SessionTranscript>& transcripts);
std::vector<protocol::SessionTranscript> read_transcripts(
    const std::string& path);

}  // namespace qpadlock::harness
