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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "qpadlock/adversary/strategies.hpp"
#include "qpadlock/adversary/strategy.hpp"
#include "qpadlock/protocol/classical.hpp"
#include "qpadlock/protocol/config.hpp"
#include "qpadlock/protocol/schedule.hpp"
#include "qpadlock/protocol/session.hpp"
#include "qpadlock/protocol/token.hpp"
#include "qpadlock/protocol/transcript.hpp"
#include "qpadlock/qcore/random.hpp"

namespace qp = qpadlock::protocol;
namespace qa = qpadlock::adversary;
namespace qc = qpadlock::qcore;

namespace {

// Trusted instrumentation: checks the honest wire invariants on every
// delivery. Honest traffic is a single qubit with real amplitudes; any
// entanglement or complex phase would mean a padlock leaked out of the
// rotation family.
class HonestWireProbe : public qp::SessionObserver {
 public:
  void on_pass_delivered(int pass_index, const qc::QuantumRegister& reg,
                         int wire_qubit) override {
    ++deliveries;
    last_pass = pass_index;
    if (reg.num_qubits() != 1) single_qubit_always = false;
    if (wire_qubit != 0) single_qubit_always = false;
    for (const auto& amp : reg.amplitudes()) {
      if (std::abs(amp.imag()) > 1e-12) real_always = false;
    }
    if (std::abs(reg.norm() - 1.0) > 1e-10) normalized_always = false;
  }

  int deliveries = 0;
  int last_pass = 0;
  bool single_qubit_always = true;
  bool real_always = true;
  bool normalized_always = true;
};

qp::SessionTranscript honest_transcript(int bit, std::uint64_t index,
                                        int outcome, bool aborted = false) {
  qp::SessionTranscript t;
  t.bit = bit;
  t.session_index = index;
  t.bob_outcome = outcome;
  t.aborted = aborted;
  return t;
}

}  // namespace

TEST_CASE("schedule shape: 2n+1 passes, alternating, LIFO removals") {
  CHECK(qp::pass_count(1) == 3);
  CHECK(qp::pass_count(3) == 7);
  CHECK_THROWS(qp::pass_count(0));
  CHECK_THROWS(qp::schedule_passes(0));

  for (int n = 1; n <= 3; ++n) {
    const auto schedule = qp::schedule_passes(n);
    REQUIRE(static_cast<int>(schedule.size()) == 2 * n + 1);

    for (int k = 0; k < static_cast<int>(schedule.size()); ++k) {
      const auto& pass = schedule[k];
      CHECK(pass.pass_index == k + 1);
      const bool odd = (k + 1) % 2 == 1;
      CHECK(pass.sender == (odd ? qp::Party::kAlice : qp::Party::kBob));
      CHECK(pass.direction == (odd ? qp::Direction::kAliceToBob
                                   : qp::Direction::kBobToAlice));
    }

    // Pass 1 applies all of Alice's padlocks in index order, pass 2 all of
    // Bob's.
    REQUIRE(static_cast<int>(schedule[0].actions.size()) == n);
    REQUIRE(static_cast<int>(schedule[1].actions.size()) == n);
    for (int i = 0; i < n; ++i) {
      CHECK(schedule[0].actions[i].owner == qp::Party::kAlice);
      CHECK(schedule[0].actions[i].op == qp::PadlockOp::kApply);
      CHECK(schedule[0].actions[i].padlock_index == i);
      CHECK(schedule[1].actions[i].owner == qp::Party::kBob);
      CHECK(schedule[1].actions[i].op == qp::PadlockOp::kApply);
      CHECK(schedule[1].actions[i].padlock_index == i);
    }

    // Later passes each remove exactly one padlock, newest first; Bob's
    // padlock 0 is deliberately absent (it comes off at finalize).
    std::vector<int> alice_removed;
    std::vector<int> bob_removed;
    for (std::size_t k = 2; k < schedule.size(); ++k) {
      REQUIRE(schedule[k].actions.size() == 1);
      const auto& action = schedule[k].actions[0];
      CHECK(action.op == qp::PadlockOp::kRemove);
      CHECK(action.owner == schedule[k].sender);
      if (action.owner == qp::Party::kAlice) {
        alice_removed.push_back(action.padlock_index);
      } else {
        bob_removed.push_back(action.padlock_index);
      }
    }
    std::vector<int> alice_expect;
    std::vector<int> bob_expect;
    for (int i = n - 1; i >= 0; --i) alice_expect.push_back(i);
    for (int i = n - 1; i >= 1; --i) bob_expect.push_back(i);
    CHECK(alice_removed == alice_expect);
    CHECK(bob_removed == bob_expect);
  }
}

TEST_CASE("honest sessions decode the bit exactly, single real qubit") {
  const auto strategy = qa::no_attack();
  for (int n = 1; n <= 3; ++n) {
    qp::SessionConfig config;
    config.padlocks_per_party = n;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const int bit = static_cast<int>(i & 1);
      qc::RandomSource rng(qc::derive_stream(555, 0, i));
      HonestWireProbe probe;
      const auto t =
          qp::run_session(config, bit, *strategy, {555, i}, rng, &probe);
      REQUIRE(!t.aborted);
      CHECK(t.bob_outcome == bit);
      CHECK(t.n == n);
      CHECK(t.bit == bit);
      CHECK(t.session_id == qc::derive_seed(555, i));
      CHECK(t.master_seed == 555);
      CHECK(t.session_index == i);
      CHECK(t.eve.records.empty());
      REQUIRE(static_cast<int>(t.events.size()) == 2 * n + 1);
      int last_stamp = -1;
      for (int k = 0; k < static_cast<int>(t.events.size()); ++k) {
        CHECK(t.events[k].pass_index == k + 1);
        CHECK(t.events[k].adversary_action_tag == "none");
        CHECK(t.events[k].direction ==
              ((k % 2 == 0) ? qp::Direction::kAliceToBob
                            : qp::Direction::kBobToAlice));
        CHECK(t.events[k].timestamp_index > last_stamp);
        last_stamp = t.events[k].timestamp_index;
      }
      CHECK(probe.deliveries == 2 * n + 1);
      CHECK(probe.last_pass == 2 * n + 1);
      CHECK(probe.single_qubit_always);
      CHECK(probe.real_always);
      CHECK(probe.normalized_always);
    }
  }
}

TEST_CASE("depolarizing wire noise matches the analytic error rate") {
  // Independent oracle: each of the 2n+1 trips depolarizes with strength
  // p, and a depolarized arm flips Bob's decoded bit with probability 1/2,
  // so P(error) = (1 - (1-p)^(2n+1)) / 2.
  const auto strategy = qa::no_attack();
  for (int n : {1, 2}) {
    qp::SessionConfig config;
    config.padlocks_per_party = n;
    config.channel_depolarize_p = 0.1;
    const int sessions = 20000;
    int errors = 0;
    for (std::uint64_t i = 0; i < sessions; ++i) {
      const int bit = static_cast<int>(i & 1);
      qc::RandomSource rng(qc::derive_stream(777, 0, i));
      const auto t = qp::run_session(config, bit, *strategy, {777, i}, rng);
      REQUIRE(!t.aborted);
      if (t.bob_outcome != bit) ++errors;
    }
    const double expected =
        (1.0 - std::pow(0.9, 2.0 * n + 1.0)) / 2.0;
    const double se = std::sqrt(expected * (1.0 - expected) / sessions);
    CHECK(std::abs(static_cast<double>(errors) / sessions - expected) <
          4.0 * se);
  }
}

TEST_CASE("fully depolarized wire still completes sessions") {
  const auto strategy = qa::no_attack();
  qp::SessionConfig config;
  config.channel_depolarize_p = 1.0;
  int errors = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    qc::RandomSource rng(qc::derive_stream(888, 0, i));
    const auto t = qp::run_session(config, static_cast<int>(i & 1), *strategy,
                                   {888, i}, rng);
    REQUIRE(!t.aborted);
    REQUIRE((t.bob_outcome == 0 || t.bob_outcome == 1));
    if (t.bob_outcome != t.bit) ++errors;
  }
  const double rate = errors / 400.0;
  CHECK(rate > 0.35);
  CHECK(rate < 0.65);
}

TEST_CASE("token ledger: single use, single live, no forgery") {
  qp::SessionConfig config;
  qp::SessionContext ctx(77, config, 0);

  auto t1 = ctx.issue();
  CHECK(ctx.has_live_token());
  CHECK_THROWS_AS(ctx.issue(), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.consume(t1));
  CHECK(!ctx.has_live_token());
  CHECK_THROWS_AS(ctx.consume(t1), qp::ProtocolViolation);

  auto t2 = ctx.issue();
  qp::StateToken forged = t2;
  forged.session_id ^= 1;
  CHECK_THROWS_AS(ctx.consume(forged), qp::ProtocolViolation);
  qp::StateToken future = t2;
  future.serial += 1;
  CHECK_THROWS_AS(ctx.consume(future), qp::ProtocolViolation);

  const qp::StateToken stale = t2;
  ctx.consume(t2);
  auto t3 = ctx.issue();
  CHECK_THROWS_AS(ctx.consume(stale), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.consume(t3));
}

TEST_CASE("pass ordering is enforced on both sides") {
  qp::SessionConfig config;
  qp::SessionContext ctx(78, config, 1);
  CHECK_THROWS_AS(ctx.begin_action(2), qp::ProtocolViolation);
  CHECK_THROWS_AS(ctx.begin_action(0), qp::ProtocolViolation);
  CHECK_THROWS_AS(ctx.begin_delivery(1), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.begin_action(1));
  CHECK_THROWS_AS(ctx.begin_action(2), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.begin_delivery(1));
  CHECK_THROWS_AS(ctx.begin_delivery(2), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.begin_action(2));
  CHECK_NOTHROW(ctx.begin_delivery(2));
  CHECK_NOTHROW(ctx.begin_action(3));
  CHECK_NOTHROW(ctx.begin_delivery(3));
  // The schedule has exactly 2n+1 passes; a fourth action is a violation.
  CHECK_THROWS_AS(ctx.begin_action(4), qp::ProtocolViolation);
}

TEST_CASE("wire operations: mint needs an empty wire, stored measurement "
          "cannot touch the wire") {
  qp::SessionConfig config;
  qp::SessionContext ctx(79, config, 0);
  qc::RandomSource rng(4242);

  CHECK(ctx.wire_qubit() == 0);
  CHECK_THROWS_AS(ctx.measure_qubit(ctx.wire_qubit(), 0.0, rng),
                  qp::ProtocolViolation);
  CHECK_THROWS_AS(ctx.mint_wire(0, 0.5), qp::ProtocolViolation);

  const int kept = ctx.detach_wire();
  CHECK(ctx.wire_qubit() == -1);
  CHECK_THROWS_AS(ctx.detach_wire(), qp::ProtocolViolation);
  CHECK_NOTHROW(ctx.measure_qubit(kept, 0.0, rng));
  CHECK_NOTHROW(ctx.mint_wire(1, 0.25));
  CHECK(ctx.wire_qubit() >= 0);
  CHECK(ctx.wire_qubit() != kept);
}

TEST_CASE("manual drive replicates a full session and blocks early finalize") {
  qp::SessionConfig config;
  qc::RandomSource rng(131);
  const auto dist = qp::AngleDistribution::continuous_uniform();
  const auto schedule = qp::schedule_passes(1);

  for (int bit = 0; bit < 2; ++bit) {
    qp::PartyState alice(
        qp::PadlockKey::draw(qp::Party::kAlice, 1, dist, rng));
    qp::PartyState bob(qp::PadlockKey::draw(qp::Party::kBob, 1, dist, rng));
    qp::SessionContext ctx(80, config, bit);

    auto t1 = alice_prepare(ctx, alice);
    ctx.consume(t1);
    ctx.begin_delivery(1);
    auto t1b = ctx.issue();
    auto t2 = qp::party_step(ctx, bob, schedule[1], t1b);
    ctx.consume(t2);
    ctx.begin_delivery(2);
    auto t2b = ctx.issue();

    SUBCASE("early finalize is a violation") {
      CHECK_THROWS_AS(qp::bob_finalize(ctx, bob, t2b, rng),
                      qp::ProtocolViolation);
    }
    SUBCASE("wrong party stepping a pass is a violation") {
      CHECK_THROWS_AS(qp::party_step(ctx, bob, schedule[2], t2b),
                      qp::ProtocolViolation);
    }
    SUBCASE("completed drive decodes the bit") {
      auto t3 = qp::party_step(ctx, alice, schedule[2], t2b);
      ctx.consume(t3);
      ctx.begin_delivery(3);
      auto t3b = ctx.issue();
      CHECK(qp::bob_finalize(ctx, bob, t3b, rng) == bit);
    }
  }
}

namespace {

// Adversary that holds the first pass token and replays it later.
class ReplayAttack : public qa::AttackStrategy {
 public:
  std::string name() const override { return "test_replay"; }
  qp::StateToken on_pass(const qp::PassDescriptor& pass, qp::StateToken token,
                         qa::EveToolbox& box, qc::RandomSource& rng) override {
    (void)box;
    (void)rng;
    if (pass.pass_index == 1) {
      stashed_ = token;
      return token;
    }
    return stashed_;
  }
  qa::EveGuess finalize(qa::EveToolbox& box, qc::RandomSource& rng) override {
    (void)box;
    (void)rng;
    return {};
  }

 private:
  qp::StateToken stashed_;
};

// Adversary that invents a future token serial.
class ForgeAttack : public qa::AttackStrategy {
 public:
  std::string name() const override { return "test_forge"; }
  qp::StateToken on_pass(const qp::PassDescriptor&, qp::StateToken token,
                         qa::EveToolbox&, qc::RandomSource&) override {
    token.serial += 7;
    return token;
  }
  qa::EveGuess finalize(qa::EveToolbox&, qc::RandomSource&) override {
    return {};
  }
};

// Adversary that tries to measure through a token it already spent.
class DoubleSpendAttack : public qa::AttackStrategy {
 public:
  std::string name() const override { return "test_double_spend"; }
  qp::StateToken on_pass(const qp::PassDescriptor&, qp::StateToken token,
                         qa::EveToolbox& box, qc::RandomSource& rng) override {
    auto [outcome, fresh] = box.measure(token, 0.0, rng);
    (void)outcome;
    auto [again, fresh2] = box.measure(token, 0.0, rng);  // spent token
    (void)again;
    return fresh2;
  }
  qa::EveGuess finalize(qa::EveToolbox&, qc::RandomSource&) override {
    return {};
  }
};

}  // namespace

TEST_CASE("token abuse aborts the session and flags the transcript") {
  qp::SessionConfig config;
  ReplayAttack replay;
  ForgeAttack forge;
  DoubleSpendAttack double_spend;
  qa::AttackStrategy* attacks[] = {&replay, &forge, &double_spend};
  for (auto* attack : attacks) {
    qc::RandomSource rng(99);
    const auto t = qp::run_session(config, 0, *attack, {99, 0}, rng);
    CHECK(t.aborted);
    CHECK(!t.abort_reason.empty());
    CHECK(t.bob_outcome == -1);
    CHECK(t.eve.guess == -1);
  }
}

TEST_CASE("padlock keys: ownership, size, and angle distributions") {
  qc::RandomSource rng(17);
  const auto cont = qp::AngleDistribution::continuous_uniform();
  const auto key = qp::PadlockKey::draw(qp::Party::kBob, 3, cont, rng);
  CHECK(key.party() == qp::Party::kBob);
  CHECK(key.size() == 3);
  for (int i = 0; i < key.size(); ++i) {
    CHECK(key.angle(i) >= 0.0);
    CHECK(key.angle(i) < 2.0 * std::numbers::pi);
  }
  const auto key2 = qp::PadlockKey::draw(qp::Party::kBob, 3, cont, rng);
  CHECK(key.angle(0) != key2.angle(0));

  const auto disc = qp::AngleDistribution::discrete_uniform(4);
  std::set<int> seen;
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = qp::PadlockKey::draw(qp::Party::kAlice, 1, disc, rng);
    const double step = std::numbers::pi / 4.0;
    const double ratio = k.angle(0) / step;
    const int level = static_cast<int>(std::lround(ratio));
    CHECK(std::abs(ratio - level) < 1e-12);
    CHECK(level >= 0);
    CHECK(level < 4);
    seen.insert(level);
  }
  CHECK(seen.size() == 4);

  CHECK(cont.describe() == "continuous");
  CHECK(disc.describe() == "discrete:4");
  CHECK(qp::AngleDistribution::parse("continuous").describe() == "continuous");
  CHECK(qp::AngleDistribution::parse("discrete:2").describe() == "discrete:2");
  CHECK_THROWS(qp::AngleDistribution::parse("gaussian"));
  CHECK_THROWS(qp::AngleDistribution::parse("discrete:"));
  CHECK_THROWS(qp::AngleDistribution::parse("discrete:x"));
  CHECK_THROWS(qp::AngleDistribution::discrete_uniform(0));
}

TEST_CASE("session config validation") {
  qp::SessionConfig config;
  CHECK_NOTHROW(config.validate());
  config.padlocks_per_party = 0;
  CHECK_THROWS(config.validate());
  config.padlocks_per_party = 1;
  config.repetition_factor = 0;
  CHECK_THROWS(config.validate());
  config.repetition_factor = 2;
  config.channel_depolarize_p = -0.01;
  CHECK_THROWS(config.validate());
  config.channel_depolarize_p = 1.01;
  CHECK_THROWS(config.validate());
  config.channel_depolarize_p = 1.0;
  CHECK_NOTHROW(config.validate());
  CHECK(config.pass_count() == 3);
}

TEST_CASE("repetition_check semantics") {
  std::vector<qp::SessionTranscript> ts;
  // Three groups of two: agree, disagree, agree-but-one-aborted.
  ts.push_back(honest_transcript(1, 0, 1));
  ts.push_back(honest_transcript(1, 1, 1));
  ts.push_back(honest_transcript(0, 2, 0));
  ts.push_back(honest_transcript(0, 3, 1));
  ts.push_back(honest_transcript(1, 4, 1));
  ts.push_back(honest_transcript(1, 5, -1, true));
  CHECK(qp::repetition_check(ts, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(qp::repetition_check(ts, 1) == doctest::Approx(1.0 / 6.0));
  CHECK(qp::repetition_check(ts, 3) == doctest::Approx(1.0));
  CHECK_THROWS(qp::repetition_check(ts, 0));
  CHECK_THROWS(qp::repetition_check(ts, 4));
  CHECK_THROWS(qp::repetition_check({}, 2));
}

TEST_CASE("classical three-pass cipher round trips and is fully broken") {
  qc::RandomSource rng(23);
  for (const int width : {1, 8, 32}) {
    const std::uint64_t mask =
        width == 32 ? 0xFFFFFFFFull : ((std::uint64_t{1} << width) - 1);
    std::vector<std::uint32_t> message(500);
    for (auto& word : message) {
      word = static_cast<std::uint32_t>(rng.next_u64() & mask);
    }
    const auto seqs = qp::three_pass_run(message, width, rng);
    CHECK(seqs.width == width);
    CHECK(seqs.seq1.size() == message.size());
    const auto recovered = qp::three_pass_break(seqs);
    CHECK(recovered == message);
  }

  CHECK_THROWS(qp::three_pass_run({1}, 0, rng));
  CHECK_THROWS(qp::three_pass_run({1}, 33, rng));
  CHECK_THROWS(qp::three_pass_run({16}, 4, rng));
  auto seqs = qp::three_pass_run({1, 2, 3}, 8, rng);
  seqs.seq2.pop_back();
  CHECK_THROWS(qp::three_pass_break(seqs));
}

TEST_CASE("direction names round trip") {
  CHECK(qp::direction_name(qp::Direction::kAliceToBob) == "alice_to_bob");
  CHECK(qp::direction_name(qp::Direction::kBobToAlice) == "bob_to_alice");
  CHECK(qp::parse_direction("alice_to_bob") == qp::Direction::kAliceToBob);
  CHECK(qp::parse_direction("bob_to_alice") == qp::Direction::kBobToAlice);
  CHECK_THROWS(qp::parse_direction("sideways"));
}
