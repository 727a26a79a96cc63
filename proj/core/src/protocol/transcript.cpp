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

#include "qpadlock/protocol/transcript.hpp"

#include <stdexcept>

namespace qpadlock::protocol {

std::string direction_name(Direction d) {
  return d == Direction::kAliceToBob ? "alice_to_bob" : "bob_to_alice";
}

Direction parse_direction(const std::string& name) {
  if (name == "alice_to_bob") return Direction::kAliceToBob;
  if (name == "bob_to_alice") return Direction::kBobToAlice;
  throw std::invalid_argument("unknown direction: " + name);
}

}  // namespace qpadlock::protocol
