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

#include <vector>

namespace qpadlock::protocol {

enum class Party { kAlice, kBob };

enum class Direction { kAliceToBob, kBobToAlice };

enum class PadlockOp { kApply, kRemove };

/// One padlock application or removal by its owning party. Applying padlock
/// i rotates the wire qubit by +angle_i, removing rotates by -angle_i.
struct PadlockAction {
  Party owner;
  int padlock_index;
  PadlockOp op;
};

/// One wire trip. The sender performs `actions` before the qubit travels;
/// directions alternate and pass 1 is always Alice to Bob.
struct PassDescriptor {
  int pass_index;  // 1-based
  Party sender;
  Direction direction;
  std::vector<PadlockAction> actions;
};

/// Number of passes for n padlocks per party: 2n+1.
int pass_count(int n);

/// Full schedule for n padlocks per party.
///
/// Pass 1: Alice applies all n of her padlocks. Pass 2: Bob applies all n of
/// his. Every later pass the sender removes the most recently applied of
/// their own padlocks still in place (last on, first off). After pass 2n+1
/// the state is locked only by Bob's first padlock, which he removes during
/// finalization; the applied and removed angles telescope to zero, so the
/// honest end-to-end map is the identity.
///
/// Throws std::invalid_argument for n < 1.
std::vector<PassDescriptor> schedule_passes(int n);

}  // namespace qpadlock::protocol
