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

#include "qpadlock/protocol/schedule.hpp"

#include <stdexcept>

namespace qpadlock::protocol {

int pass_count(int n) {
  if (n < 1) throw std::invalid_argument("padlocks_per_party must be >= 1");
  return 2 * n + 1;
}

std::vector<PassDescriptor> schedule_passes(int n) {
  const int total = pass_count(n);
  std::vector<PassDescriptor> passes;
  passes.reserve(static_cast<std::size_t>(total));

  for (int k = 1; k <= total; ++k) {
    const bool alice_sends = (k % 2) == 1;
    PassDescriptor pass;
    pass.pass_index = k;
    pass.sender = alice_sends ? Party::kAlice : Party::kBob;
    pass.direction =
        alice_sends ? Direction::kAliceToBob : Direction::kBobToAlice;

    if (k == 1) {
      for (int i = 0; i < n; ++i) {
        pass.actions.push_back({Party::kAlice, i, PadlockOp::kApply});
      }
    } else if (k == 2) {
      for (int i = 0; i < n; ++i) {
        pass.actions.push_back({Party::kBob, i, PadlockOp::kApply});
      }
    } else {
      // last on, first off: Alice removes at passes 3,5,..,2n+1 working
      // down from padlock n-1; Bob removes at passes 4,6,..,2n and keeps
      // padlock 0 for finalize
      const int removal_round = (k - 3) / 2;  // 0-based per party
      pass.actions.push_back(
          {pass.sender, n - 1 - removal_round, PadlockOp::kRemove});
    }
    passes.push_back(std::move(pass));
  }
  return passes;
}

}  // namespace qpadlock::protocol
