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

#include "qpadlock/protocol/session.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qpadlock/adversary/strategy.hpp"

namespace qpadlock::protocol {

// ---------------------------------------------------------------- config --

AngleDistribution AngleDistribution::continuous_uniform() {
  return AngleDistribution(Kind::kContinuousUniform, 0);
}

AngleDistribution AngleDistribution::discrete_uniform(int levels) {
  if (levels < 1) throw std::invalid_argument("discrete levels must be >= 1");
  return AngleDistribution(Kind::kDiscreteUniform, levels);
}

double AngleDistribution::sample(qcore::RandomSource& rng) const {
  if (kind_ == Kind::kContinuousUniform) return rng.angle();
  return std::numbers::pi * static_cast<double>(rng.uniform_int(levels_)) /
         static_cast<double>(levels_);
}

std::string AngleDistribution::describe() const {
  if (kind_ == Kind::kContinuousUniform) return "continuous";
  return "discrete:" + std::to_string(levels_);
}

AngleDistribution AngleDistribution::parse(const std::string& text) {
  if (text == "continuous") return continuous_uniform();
  constexpr const char* kPrefix = "discrete:";
  if (text.rfind(kPrefix, 0) == 0) {
    const std::string tail = text.substr(9);
    std::size_t used = 0;
    const int levels = std::stoi(tail, &used);
    if (used != tail.size()) {
      throw std::invalid_argument("bad angle distribution: " + text);
    }
    return discrete_uniform(levels);
  }
  throw std::invalid_argument("bad angle distribution: " + text);
}

int SessionConfig::pass_count() const {
  return protocol::pass_count(padlocks_per_party);
}

void SessionConfig::validate() const {
  if (padlocks_per_party < 1) {
    throw std::invalid_argument("padlocks_per_party must be >= 1");
  }
  if (repetition_factor < 1) {
    throw std::invalid_argument("repetition_factor must be >= 1");
  }
  if (!(channel_depolarize_p >= 0.0 && channel_depolarize_p <= 1.0)) {
    throw std::invalid_argument("channel_depolarize_p must be in [0, 1]");
  }
}

// ------------------------------------------------------------------ keys --

PadlockKey PadlockKey::draw(Party party, int n, const AngleDistribution& dist,
                            qcore::RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("key needs at least one padlock");
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) angles.push_back(dist.sample(rng));
  return PadlockKey(party, std::move(angles));
}

// --------------------------------------------------------------- context --

SessionContext::SessionContext(std::uint64_t session_id,
                               const SessionConfig& config, int bit)
    : session_id_(session_id),
      config_(config),
      reg_(qcore::QuantumRegister::basis_state(1, static_cast<std::uint64_t>(bit))),
      wire_qubit_(0) {
  config_.validate();
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
}

StateToken SessionContext::issue() {
  if (live_serial_ != 0) {
    throw ProtocolViolation("token issue refused: one is already in flight");
  }
  if (wire_qubit_ < 0) {
    throw ProtocolViolation("token issue refused: the wire is empty");
  }
  live_serial_ = next_serial_++;
  return StateToken{session_id_, live_serial_};
}

void SessionContext::consume(const StateToken& token) {
  if (token.session_id != session_id_) {
    throw ProtocolViolation("token from another session");
  }
  if (live_serial_ == 0 || token.serial != live_serial_) {
    throw ProtocolViolation("stale token");
  }
  live_serial_ = 0;
}

void SessionContext::begin_action(int pass_index) {
  if (pass_index != actions_taken_ + 1 || passes_delivered_ != actions_taken_ ||
      pass_index > config_.pass_count()) {
    throw ProtocolViolation("sender action out of order");
  }
  actions_taken_ = pass_index;
}

void SessionContext::begin_delivery(int pass_index) {
  if (pass_index != passes_delivered_ + 1 || actions_taken_ != pass_index) {
    throw ProtocolViolation("delivery out of order");
  }
  passes_delivered_ = pass_index;
}

void SessionContext::rotate_wire(double theta) {
  if (wire_qubit_ < 0) throw ProtocolViolation("no qubit in flight");
  qcore::apply_gate(reg_, wire_qubit_, qcore::RotationGate(theta));
}

qcore::MeasurementRecord SessionContext::measure_wire(double basis_angle,
                                                      qcore::RandomSource& rng) {
  if (wire_qubit_ < 0) throw ProtocolViolation("no qubit in flight");
  return qcore::measure(reg_, wire_qubit_, basis_angle, rng);
}

qcore::CloneResult SessionContext::clone_wire() {
  if (wire_qubit_ < 0) throw ProtocolViolation("no qubit in flight");
  return qcore::uqcm_clone(reg_, wire_qubit_);
}

int SessionContext::detach_wire() {
  if (wire_qubit_ < 0) throw ProtocolViolation("no qubit in flight");
  if (live_serial_ != 0) {
    throw ProtocolViolation("detach while its token is outstanding");
  }
  const int kept = wire_qubit_;
  wire_qubit_ = -1;
  return kept;
}

void SessionContext::mint_wire(int bit, double angle) {
  if (wire_qubit_ >= 0) throw ProtocolViolation("wire already occupied");
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  const int fresh = reg_.attach_ancilla(1);
  // R(angle)|bit> = R(angle + bit*pi/2)|0> by rotation additivity
  qcore::apply_gate(
      reg_, fresh,
      qcore::RotationGate(angle + static_cast<double>(bit) *
                                      (std::numbers::pi / 2.0)));
  wire_qubit_ = fresh;
}

void SessionContext::apply_wire_noise(qcore::RandomSource& rng) {
  const double p = config_.channel_depolarize_p;
  if (p <= 0.0) return;
  if (wire_qubit_ < 0) throw ProtocolViolation("no qubit in flight");
  // (1-p) rho + p I/2 == apply a uniform Pauli with probability 3p/4
  if (rng.uniform() < 0.75 * p) {
    const int which = rng.uniform_int(3);
    const auto pauli = which == 0   ? qcore::Pauli::kX
                       : which == 1 ? qcore::Pauli::kY
                                    : qcore::Pauli::kZ;
    qcore::apply_pauli(reg_, wire_qubit_, pauli);
  }
}

qcore::MeasurementRecord SessionContext::measure_qubit(
    int qubit_index, double basis_angle, qcore::RandomSource& rng) {
  if (qubit_index < 0 || qubit_index >= reg_.num_qubits()) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (qubit_index == wire_qubit_) {
    throw ProtocolViolation("the in-flight qubit needs its token");
  }
  return qcore::measure(reg_, qubit_index, basis_angle, rng);
}

// ----------------------------------------------------------- party moves --

namespace {

void execute_actions(SessionContext& ctx, PartyState& party,
                     const std::vector<PadlockAction>& actions) {
  for (const auto& action : actions) {
    if (action.owner != party.key.party()) {
      throw ProtocolViolation("padlock action for the other party");
    }
    if (action.padlock_index < 0 || action.padlock_index >= party.key.size()) {
      throw ProtocolViolation("padlock index out of range");
    }
    const auto i = static_cast<std::size_t>(action.padlock_index);
    const double theta = party.key.angle(action.padlock_index);
    if (action.op == PadlockOp::kApply) {
      if (party.applied[i]) throw ProtocolViolation("padlock already applied");
      ctx.rotate_wire(theta);
      party.applied[i] = true;
    } else {
      if (!party.applied[i]) throw ProtocolViolation("padlock not applied");
      ctx.rotate_wire(-theta);
      party.applied[i] = false;
    }
  }
}

}  // namespace

StateToken alice_prepare(SessionContext& ctx, PartyState& alice) {
  if (alice.key.party() != Party::kAlice) {
    throw ProtocolViolation("preparation is Alice's move");
  }
  if (ctx.has_live_token()) {
    throw ProtocolViolation("prepare with a token already in flight");
  }
  ctx.begin_action(1);
  std::vector<PadlockAction> apply_all;
  for (int i = 0; i < alice.key.size(); ++i) {
    apply_all.push_back({Party::kAlice, i, PadlockOp::kApply});
  }
  execute_actions(ctx, alice, apply_all);
  return ctx.issue();
}

StateToken party_step(SessionContext& ctx, PartyState& party,
                      const PassDescriptor& pass, StateToken token) {
  ctx.consume(token);
  if (party.key.party() != pass.sender) {
    throw ProtocolViolation("acting out of turn");
  }
  ctx.begin_action(pass.pass_index);
  execute_actions(ctx, party, pass.actions);
  return ctx.issue();
}

int bob_finalize(SessionContext& ctx, PartyState& bob, StateToken token,
                 qcore::RandomSource& rng) {
  ctx.consume(token);
  if (bob.key.party() != Party::kBob) {
    throw ProtocolViolation("finalization is Bob's move");
  }
  if (ctx.passes_delivered() != ctx.config().pass_count()) {
    throw ProtocolViolation("finalize before the final delivery");
  }
  for (int i = bob.key.size() - 1; i >= 0; --i) {
    if (bob.applied[static_cast<std::size_t>(i)]) {
      ctx.rotate_wire(-bob.key.angle(i));
      bob.applied[static_cast<std::size_t>(i)] = false;
    }
  }
  return ctx.measure_wire(0.0, rng).outcome;
}

// --------------------------------------------------------------- session --

namespace {

/// One complete honest exchange over a fresh register, used for both halves
/// of a channel-terminating attack. Events carry `tag`. Returns the
/// receiver's decoded bit.
int run_exchange(const SessionConfig& config, int bit, std::uint64_t session_id,
                 qcore::RandomSource& rng, std::vector<PassEvent>& events,
                 const std::string& tag, int& clock) {
  const int n = config.padlocks_per_party;
  PartyState alice(
      PadlockKey::draw(Party::kAlice, n, config.angle_distribution, rng));
  PartyState bob(
      PadlockKey::draw(Party::kBob, n, config.angle_distribution, rng));
  SessionContext ctx(session_id, config, bit);
  const auto schedule = schedule_passes(n);

  StateToken token = alice_prepare(ctx, alice);
  for (const auto& pass : schedule) {
    ctx.apply_wire_noise(rng);
    ctx.consume(token);
    ctx.begin_delivery(pass.pass_index);
    events.push_back({pass.pass_index, pass.direction, tag, clock++});
    token = ctx.issue();
    if (pass.pass_index < static_cast<int>(schedule.size())) {
      PartyState& receiver =
          pass.direction == Direction::kAliceToBob ? bob : alice;
      token = party_step(ctx, receiver,
                         schedule[static_cast<std::size_t>(pass.pass_index)],
                         token);
    }
  }
  return bob_finalize(ctx, bob, token, rng);
}

}  // namespace

SessionTranscript run_session(const SessionConfig& config, int bit,
                              adversary::AttackStrategy& strategy,
                              const SessionIds& ids, qcore::RandomSource& rng,
                              SessionObserver* observer) {
  config.validate();
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");

  SessionTranscript t;
  t.session_id = qcore::derive_seed(ids.master_seed, ids.session_index);
  t.n = config.padlocks_per_party;
  t.repetition_factor = config.repetition_factor;
  t.bit = bit;
  t.master_seed = ids.master_seed;
  t.session_index = ids.session_index;

  int clock = 0;
  if (strategy.terminates_channel()) {
    // Eve plays receiver to Alice, learns the bit, then plays sender to
    // Bob. Each half is a complete honest run with Eve's own keys, so
    // neither side can see an error.
    const int learned = run_exchange(config, bit, t.session_id, rng, t.events,
                                     "mitm_upstream", clock);
    t.bob_outcome =
        run_exchange(config, learned, qcore::derive_seed(t.session_id, 1), rng,
                     t.events, "mitm_downstream", clock);
    t.eve.records.push_back(
        {0, "terminate_channel", learned, std::nullopt, std::nullopt});
    t.eve.guess = learned;
    t.eve.confidence = 1.0;
    return t;
  }

  try {
    const int n = config.padlocks_per_party;
    PartyState alice(
        PadlockKey::draw(Party::kAlice, n, config.angle_distribution, rng));
    PartyState bob(
        PadlockKey::draw(Party::kBob, n, config.angle_distribution, rng));
    SessionContext ctx(t.session_id, config, bit);
    adversary::EveToolbox box(ctx, t.eve);
    const auto schedule = schedule_passes(n);

    StateToken token = alice_prepare(ctx, alice);
    for (const auto& pass : schedule) {
      ctx.apply_wire_noise(rng);
      box.begin_pass(pass.pass_index);
      token = strategy.on_pass(pass, token, box, rng);
      ctx.consume(token);
      ctx.begin_delivery(pass.pass_index);
      t.events.push_back(
          {pass.pass_index, pass.direction, box.take_pass_tag(), clock++});
      if (observer != nullptr) {
        observer->on_pass_delivered(pass.pass_index, ctx.reg(),
                                    ctx.wire_qubit());
      }
      token = ctx.issue();
      if (pass.pass_index < static_cast<int>(schedule.size())) {
        PartyState& receiver =
            pass.direction == Direction::kAliceToBob ? bob : alice;
        token = party_step(ctx, receiver,
                           schedule[static_cast<std::size_t>(pass.pass_index)],
                           token);
      }
    }
    box.begin_pass(0);  // toolbox actions from here on are finalize actions
    t.bob_outcome = bob_finalize(ctx, bob, token, rng);
    const auto guess = strategy.finalize(box, rng);
    t.eve.guess = guess.bit;
    t.eve.confidence = guess.confidence;
  } catch (const ProtocolViolation& e) {
    t.aborted = true;
    t.abort_reason = e.what();
    t.bob_outcome = -1;
    t.eve.guess = -1;
    t.eve.confidence = 0.0;
  } catch (const qcore::CapacityError& e) {
    t.aborted = true;
    t.abort_reason = e.what();
    t.bob_outcome = -1;
    t.eve.guess = -1;
    t.eve.confidence = 0.0;
  }
  return t;
}

double repetition_check(const std::vector<SessionTranscript>& transcripts,
                        int r) {
  if (r < 1) throw std::invalid_argument("repetition factor must be >= 1");
  if (transcripts.empty() ||
      transcripts.size() % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument(
        "transcript count must be a positive multiple of r");
  }
  const std::size_t groups = transcripts.size() / static_cast<std::size_t>(r);
  std::size_t mismatched = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    bool bad = false;
    const auto& first = transcripts[g * static_cast<std::size_t>(r)];
    for (int c = 0; c < r; ++c) {
      const auto& copy =
          transcripts[g * static_cast<std::size_t>(r) + static_cast<std::size_t>(c)];
      if (copy.aborted || copy.bob_outcome != first.bob_outcome) {
        bad = true;
        break;
      }
    }
    if (bad) ++mismatched;
  }
  return static_cast<double>(mismatched) / static_cast<double>(groups);
}

}  // namespace qpadlock::protocol
