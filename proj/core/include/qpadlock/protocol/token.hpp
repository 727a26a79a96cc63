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
#include <stdexcept>

namespace qpadlock::protocol {

/// Raised on any breach of the wire discipline: stale or foreign tokens,
/// out-of-order passes, double-issued qubits. Sessions catching this abort
/// and flag the transcript; they never continue silently.
class ProtocolViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The only thing that travels on the simulated wire. A token is a claim
/// ticket for the one in-flight qubit of one session; it carries no state
/// data. Every handling step consumes the live token and issues a fresh
/// serial, so a held copy of an old token is worthless. That single-use rule
/// is how the simulator embodies no-cloning at the API boundary.
struct StateToken {
  std::uint64_t session_id = 0;
  std::uint64_t serial = 0;
};

}  // namespace qpadlock::protocol
