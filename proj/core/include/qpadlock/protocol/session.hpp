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

#include "qpadlock/protocol/config.hpp"
#include "qpadlock/protocol/schedule.hpp"
#include "qpadlock/protocol/token.hpp"
#include "qpadlock/protocol/transcript.hpp"
#include "qpadlock/qcore/cloning.hpp"
#include "qpadlock/qcore/random.hpp"
#include "qpadlock/qcore/register.hpp"

namespace qpadlock::adversary {
class AttackStrategy;
}  // namespace qpadlock::adversary

namespace qpadlock::protocol {

/// A party's secret rotation angles for one bit-session. Deliberately has
/// no serialized form: angles are reachable only through this accessor and
/// nothing in the transcript or wire layer stores them. Fresh keys are
/// drawn for every session; reuse is not supported.
class PadlockKey {
 public:
  static PadlockKey draw(Party party, int n, const AngleDistribution& dist,
                         qcore::RandomSource& rng);

  Party party() const { return party_; }
  int size() const { return static_cast<int>(angles_.size()); }
  double angle(int i) const { return angles_.at(i); }

 private:
  PadlockKey(Party party, std::vector<double> angles)
      : party_(party), angles_(std::move(angles)) {}

  Party party_;
  std::vector<double> angles_;
};

/// A party's live protocol state: its key plus which padlocks are
/// currently on the wire qubit.
struct PartyState {
  explicit PartyState(PadlockKey k)
      : key(std::move(k)), applied(static_cast<std::size_t>(key.size()), false) {}

  PadlockKey key;
  std::vector<bool> applied;
};

/// Owns one session's register, wire qubit, token ledger, and pass-order
/// bookkeeping. All wire mutations funnel through here so the single-use
/// token rule and the pass ordering are enforced in exactly one place.
///
/// Token rule: at most one live token exists; issue() refuses while one is
/// live, consume() refuses anything but the live token. Every violation
/// throws ProtocolViolation.
class SessionContext {
 public:
  SessionContext(std::uint64_t session_id, const SessionConfig& config, int bit);

  std::uint64_t session_id() const { return session_id_; }
  const SessionConfig& config() const { return config_; }
  const qcore::QuantumRegister& reg() const { return reg_; }
  /// Index of the in-flight qubit, -1 while the wire is empty.
  int wire_qubit() const { return wire_qubit_; }

  StateToken issue();
  void consume(const StateToken& token);
  bool has_live_token() const { return live_serial_ != 0; }

  /// Sender-side bookkeeping for pass k; passes must run 1..2n+1 in order.
  void begin_action(int pass_index);
  /// Receiver-side bookkeeping; delivery k follows action k.
  void begin_delivery(int pass_index);
  int actions_taken() const { return actions_taken_; }
  int passes_delivered() const { return passes_delivered_; }

  void rotate_wire(double theta);
  qcore::MeasurementRecord measure_wire(double basis_angle,
                                        qcore::RandomSource& rng);
  /// UQCM on the wire qubit; the wire keeps flying as the original slot.
  qcore::CloneResult clone_wire();
  /// Takes the wire qubit out of flight (the holder keeps it); returns its
  /// register index. The wire is empty until mint_wire.
  int detach_wire();
  /// Puts a fresh qubit prepared as R(angle)|bit> in flight. Requires an
  /// empty wire.
  void mint_wire(int bit, double angle);
  /// One stochastic depolarizing step on the wire qubit: with probability
  /// 3p/4 applies a uniformly chosen Pauli. Matches the analytic channel
  /// (1-p) rho + p I/2 in distribution.
  void apply_wire_noise(qcore::RandomSource& rng);
  /// Projective measurement of a kept (off-wire) qubit.
  qcore::MeasurementRecord measure_qubit(int qubit_index, double basis_angle,
                                         qcore::RandomSource& rng);

 private:
  std::uint64_t session_id_;
  SessionConfig config_;
  qcore::QuantumRegister reg_;
  int wire_qubit_;
  std::uint64_t live_serial_ = 0;
  std::uint64_t next_serial_ = 1;
  int actions_taken_ = 0;
  int passes_delivered_ = 0;
};

/// Test and analysis hook: sees the register right after each delivery,
/// before the receiver acts. Observers are trusted instrumentation, not
/// part of the protocol surface.
class SessionObserver {
 public:
  virtual ~SessionObserver() = default;
  virtual void on_pass_delivered(int pass_index,
                                 const qcore::QuantumRegister& reg,
                                 int wire_qubit) = 0;
};

/// Executes pass 1: register holds |bit> (from the context constructor),
/// Alice applies all of her padlocks, and the first token is issued.
StateToken alice_prepare(SessionContext& ctx, PartyState& alice);

/// Executes the sender actions of `pass` (padlock applications or
/// removals). Consumes `token`, issues the next one. Throws
/// ProtocolViolation on a stale token, out-of-order pass, or an action the
/// descriptor assigns to the other party.
StateToken party_step(SessionContext& ctx, PartyState& party,
                      const PassDescriptor& pass, StateToken token);

/// After the final delivery: Bob removes his remaining padlocks and
/// measures the wire qubit in the basis {|0>, |1>}. Returns the decoded bit.
int bob_finalize(SessionContext& ctx, PartyState& bob, StateToken token,
                 qcore::RandomSource& rng);

/// Replay coordinates stamped into every transcript. The session's random
/// stream must be derived from exactly these two values.
struct SessionIds {
  std::uint64_t master_seed = 0;
  std::uint64_t session_index = 0;
};

/// Runs one complete session: key draws, the 2n+1 pass schedule with
/// per-pass channel noise and the adversary hook, Bob's finalize, the
/// adversary's finalize. Deterministic given (config, bit, strategy, rng
/// state). A ProtocolViolation or register-capacity overflow raised by
/// adversary action aborts the session and flags the transcript instead of
/// propagating.
SessionTranscript run_session(const SessionConfig& config, int bit,
                              adversary::AttackStrategy& strategy,
                              const SessionIds& ids, qcore::RandomSource& rng,
                              SessionObserver* observer = nullptr);

/// Fraction of logical bits whose r received copies do not all agree.
/// Transcripts are consecutive blocks of r sessions per logical bit, in
/// index order; an aborted copy counts as a disagreement. Throws
/// std::invalid_argument for r < 1 or a transcript count that is not a
/// multiple of r.
double repetition_check(const std::vector<SessionTranscript>& transcripts,
                        int r);

}  // namespace qpadlock::protocol
