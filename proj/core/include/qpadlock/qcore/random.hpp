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
#include <numbers>
#include <random>

namespace qpadlock::qcore {

/// Stateless 64-bit mix (splitmix64 finalizer). Stable across platforms.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stable hash of (master_seed, index) used to derive independent streams.
/// Changing the total number of streams never perturbs earlier ones.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Domain-separated variant: streams with different tags never collide.
constexpr std::uint64_t derive_stream(std::uint64_t master, std::uint64_t tag,
                                      std::uint64_t index) {
  return derive_seed(derive_seed(master, tag ^ 0x9e6c63d0876a9a41ULL), index);
}

/// Deterministic random source, passed explicitly to every sampling
/// operation. No global randomness exists anywhere in the library.
///
/// Doubles are built from the raw 64-bit stream (53 mantissa bits), so the
/// sequence is identical across standard library implementations; none of
/// the implementation-defined <random> distributions are used.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(mix64(seed)) {}

  static RandomSource for_session(std::uint64_t master_seed,
                                  std::uint64_t session_index) {
    return RandomSource(derive_seed(master_seed, session_index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform angle in [0, 2*pi).
  double angle() { return uniform() * 2.0 * std::numbers::pi; }

  /// Uniform integer in [0, n). Rejection-sampled, exactly uniform.
  int uniform_int(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t reject_below = (0 - un) % un;  // 2^64 mod n
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r < reject_below);
    return static_cast<int>(r % un);
  }

  /// Fair bit.
  int coin() { return static_cast<int>(next_u64() & 1u); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qpadlock::qcore
