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

#include <optional>
#include <string>
#include <utility>

#include "qpadlock/protocol/schedule.hpp"
#include "qpadlock/protocol/token.hpp"
#include "qpadlock/protocol/transcript.hpp"
#include "qpadlock/qcore/random.hpp"

namespace qpadlock::protocol {
class SessionContext;
}  // namespace qpadlock::protocol

namespace qpadlock::adversary {

/// Opaque handle to a qubit the adversary kept out of flight.
using QubitHandle = int;

/// The adversary's entire API surface. Every capability is a physically
/// allowed operation on qubits she actually holds; nothing here reveals
/// amplitudes, key angles, or register internals, and there is no copy
/// capability. Each wire operation consumes the live token and hands back
/// a fresh one, and each is logged into the session's EveTrace
/// automatically, so records always reflect exactly what was done.
class EveToolbox {
 public:
  EveToolbox(protocol::SessionContext& ctx, protocol::EveTrace& trace);

  /// Pass currently in flight; 0 outside any pass (finalize time).
  int pass_index() const { return pass_index_; }

  /// Rotates the in-flight qubit by theta.
  protocol::StateToken rotate(protocol::StateToken token, double theta);

  /// Measures the in-flight qubit in the basis rotated by basis_angle.
  /// Collapses the state; the outcome is recorded and returned.
  std::pair<int, protocol::StateToken> measure(protocol::StateToken token,
                                               double basis_angle,
                                               qcore::RandomSource& rng);

  struct CloneHandles {
    QubitHandle clone;
    QubitHandle machine;
  };

  /// Runs the universal cloning machine on the in-flight qubit. The
  /// original keeps flying; the clone and machine qubits stay with the
  /// adversary as handles. Capacity overflow aborts the session.
  std::pair<CloneHandles, protocol::StateToken> clone_in_flight(
      protocol::StateToken token);

  /// Takes the in-flight qubit out of the channel for keeps. The wire is
  /// then empty: forward a minted qubit or the session dies.
  QubitHandle store(protocol::StateToken token);

  /// Puts a fresh qubit prepared as R(angle)|bit> on the empty wire.
  protocol::StateToken mint(int bit, double angle);

  /// Measures a kept qubit; legal any time, including at finalize.
  int measure_stored(QubitHandle handle, double basis_angle,
                     qcore::RandomSource& rng);

  /// The adversary reading her own notebook. Strategies derive their final
  /// guess from this instead of carrying cross-pass state of their own.
  const protocol::EveTrace& trace() const { return trace_; }

  /// Session-runner side: marks the start of pass k and clears the
  /// per-pass action tag.
  void begin_pass(int pass_index);
  /// "none" if the strategy touched nothing this pass, else the
  /// comma-joined action names.
  std::string take_pass_tag();

 private:
  void record(std::string action, std::optional<int> outcome,
              std::optional<double> basis, std::optional<int> handle);

  protocol::SessionContext& ctx_;
  protocol::EveTrace& trace_;
  int pass_index_ = 0;
  std::string pass_tag_;
};

/// The adversary's end-of-session output.
struct EveGuess {
  int bit = -1;
  double confidence = 0.0;
};

/// A pluggable eavesdropper. One instance serves one session; factories
/// are shared read-only across workers, instances are not.
///
/// Contract per pass: receive the live token, do anything the toolbox
/// allows, return exactly one valid token for delivery. Returning a stale
/// token, hoarding the qubit without minting a decoy, or overflowing the
/// register gets the session aborted and flagged.
class AttackStrategy {
 public:
  virtual ~AttackStrategy() = default;

  virtual std::string name() const = 0;

  /// Channel-terminating strategies never see per-pass hooks; the session
  /// runner gives them the full impersonation treatment instead.
  virtual bool terminates_channel() const { return false; }

  virtual protocol::StateToken on_pass(const protocol::PassDescriptor& pass,
                                       protocol::StateToken token,
                                       EveToolbox& box,
                                       qcore::RandomSource& rng) = 0;

  /// Called after Bob measured. May measure kept qubits via the toolbox.
  virtual EveGuess finalize(EveToolbox& box, qcore::RandomSource& rng) = 0;
};

}  // namespace qpadlock::adversary
