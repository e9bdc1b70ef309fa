// Copyright 2026 The Blotto Authors.
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

namespace blotto {

/// Deterministic pseudorandom stream (xoshiro256++ seeded via splitmix64).
///
/// Same seed, same sequence, bit for bit. fork(index) derives an independent
/// child stream from the construction seed and the index only, so forked
/// streams do not depend on how far the parent has been consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on [0,1) with 53-bit resolution.
  double uniform01();

  /// Uniformly distributed value on [0, 2^bits), bits in [1,64].
  std::uint64_t next_bits(int bits);

  RngStream fork(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
};

}  // namespace blotto
