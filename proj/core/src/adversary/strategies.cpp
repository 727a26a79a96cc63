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

#include "qpadlock/adversary/strategies.hpp"

#include <stdexcept>

#include "qpadlock/protocol/session.hpp"

namespace qpadlock::adversary {

// --------------------------------------------------------------- toolbox --

EveToolbox::EveToolbox(protocol::SessionContext& ctx, protocol::EveTrace& trace)
    : ctx_(ctx), trace_(trace) {}

void EveToolbox::record(std::string action, std::optional<int> outcome,
                        std::optional<double> basis,
                        std::optional<int> handle) {
  if (pass_index_ > 0) {
    if (!pass_tag_.empty()) pass_tag_ += ',';
    pass_tag_ += action;
  }
  trace_.records.push_back(
      {pass_index_, std::move(action), outcome, basis, handle});
}

protocol::StateToken EveToolbox::rotate(protocol::StateToken token,
                                        double theta) {
  ctx_.consume(token);
  ctx_.rotate_wire(theta);
  record("rotate", std::nullopt, std::nullopt, std::nullopt);
  return ctx_.issue();
}

std::pair<int, protocol::StateToken> EveToolbox::measure(
    protocol::StateToken token, double basis_angle, qcore::RandomSource& rng) {
  ctx_.consume(token);
  const auto rec = ctx_.measure_wire(basis_angle, rng);
  record("measure", rec.outcome, basis_angle, std::nullopt);
  return {rec.outcome, ctx_.issue()};
}

std::pair<EveToolbox::CloneHandles, protocol::StateToken>
EveToolbox::clone_in_flight(protocol::StateToken token) {
  ctx_.consume(token);
  const auto result = ctx_.clone_wire();
  record("clone", std::nullopt, std::nullopt, result.clone_qubit);
  return {CloneHandles{result.clone_qubit, result.machine_qubit}, ctx_.issue()};
}

QubitHandle EveToolbox::store(protocol::StateToken token) {
  ctx_.consume(token);
  const int kept = ctx_.detach_wire();
  record("store", std::nullopt, std::nullopt, kept);
  return kept;
}

protocol::StateToken EveToolbox::mint(int bit, double angle) {
  ctx_.mint_wire(bit, angle);
  record("mint", std::nullopt, std::nullopt, std::nullopt);
  return ctx_.issue();
}

int EveToolbox::measure_stored(QubitHandle handle, double basis_angle,
                               qcore::RandomSource& rng) {
  const auto rec = ctx_.measure_qubit(handle, basis_angle, rng);
  record("measure_stored", rec.outcome, basis_angle, handle);
  return rec.outcome;
}

void EveToolbox::begin_pass(int pass_index) {
  pass_index_ = pass_index;
  pass_tag_.clear();
}

std::string EveToolbox::take_pass_tag() {
  if (pass_tag_.empty()) return "none";
  std::string tag;
  tag.swap(pass_tag_);
  return tag;
}

// ------------------------------------------------------------ strategies --

namespace {

void validate_passes(const std::set<int>& passes) {
  if (passes.empty()) throw std::invalid_argument("pass set is empty");
  if (*passes.begin() < 1) {
    throw std::invalid_argument("pass indices start at 1");
  }
}

class NoAttack final : public AttackStrategy {
 public:
  std::string name() const override { return "no_attack"; }

  protocol::StateToken on_pass(const protocol::PassDescriptor&,
                               protocol::StateToken token, EveToolbox&,
                               qcore::RandomSource&) override {
    return token;
  }

  EveGuess finalize(EveToolbox&, qcore::RandomSource& rng) override {
    return {rng.coin(), 0.5};
  }
};

class InterceptResend final : public AttackStrategy {
 public:
  InterceptResend(BasisPolicy policy, std::set<int> passes)
      : policy_(policy), passes_(std::move(passes)) {}

  std::string name() const override { return "intercept_resend"; }

  protocol::StateToken on_pass(const protocol::PassDescriptor& pass,
                               protocol::StateToken token, EveToolbox& box,
                               qcore::RandomSource& rng) override {
    if (passes_.count(pass.pass_index) == 0) return token;
    const double phi = policy_.is_fixed ? policy_.phi : rng.angle();
    auto [outcome, after] = box.measure(token, phi, rng);
    // keep the collapsed original, send a fresh qubit in the observed
    // basis state
    box.store(after);
    return box.mint(outcome, phi);
  }

  EveGuess finalize(EveToolbox& box, qcore::RandomSource& rng) override {
    for (const auto& rec : box.trace().records) {
      if (rec.action == "measure" && rec.outcome.has_value()) {
        return {*rec.outcome, 0.5};
      }
    }
    return {rng.coin(), 0.5};
  }

 private:
  BasisPolicy policy_;
  std::set<int> passes_;
};

class CloneAttack final : public AttackStrategy {
 public:
  CloneAttack(std::set<int> passes, CloneMeasurement measurement)
      : passes_(std::move(passes)), measurement_(measurement) {}

  std::string name() const override { return "clone_attack"; }

  protocol::StateToken on_pass(const protocol::PassDescriptor& pass,
                               protocol::StateToken token, EveToolbox& box,
                               qcore::RandomSource&) override {
    if (passes_.count(pass.pass_index) == 0) return token;
    return box.clone_in_flight(token).second;
  }

  EveGuess finalize(EveToolbox& box, qcore::RandomSource& rng) override {
    if (measurement_ == CloneMeasurement::kDefer) return {rng.coin(), 0.5};
    int votes[2] = {0, 0};
    for (const auto& rec : box.trace().records) {
      if (rec.action == "clone" && rec.stored_handle.has_value()) {
        const int outcome = box.measure_stored(*rec.stored_handle, 0.0, rng);
        ++votes[outcome];
      }
    }
    const int total = votes[0] + votes[1];
    if (total == 0 || votes[0] == votes[1]) return {rng.coin(), 0.5};
    const int guess = votes[1] > votes[0] ? 1 : 0;
    return {guess, static_cast<double>(votes[guess]) /
                       static_cast<double>(total)};
  }

 private:
  std::set<int> passes_;
  CloneMeasurement measurement_;
};

class FullMitm final : public AttackStrategy {
 public:
  std::string name() const override { return "full_mitm"; }

  bool terminates_channel() const override { return true; }

  protocol::StateToken on_pass(const protocol::PassDescriptor&,
                               protocol::StateToken token, EveToolbox&,
                               qcore::RandomSource&) override {
    return token;  // never reached; the runner handles termination
  }

  EveGuess finalize(EveToolbox&, qcore::RandomSource&) override {
    return {-1, 0.0};  // never reached
  }
};

}  // namespace

BasisPolicy BasisPolicy::fixed(double phi) { return {true, phi}; }

BasisPolicy BasisPolicy::uniform_random() { return {false, 0.0}; }

std::unique_ptr<AttackStrategy> no_attack() {
  return std::make_unique<NoAttack>();
}

std::unique_ptr<AttackStrategy> intercept_resend(BasisPolicy policy,
                                                 std::set<int> passes) {
  validate_passes(passes);
  return std::make_unique<InterceptResend>(policy, std::move(passes));
}

std::unique_ptr<AttackStrategy> clone_attack(std::set<int> passes,
                                             CloneMeasurement measurement) {
  validate_passes(passes);
  if (passes.size() > 3) {
    throw std::invalid_argument(
        "clone_attack fits at most 3 passes in the register");
  }
  return std::make_unique<CloneAttack>(std::move(passes), measurement);
}

std::unique_ptr<AttackStrategy> full_mitm() {
  return std::make_unique<FullMitm>();
}

}  // namespace qpadlock::adversary
