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

#include <vector>

#include "blotto/game.hpp"
#include "blotto/rng.hpp"

namespace blotto {

/// Battlefield-to-group assignment with 1-based labels in {1..k}.
struct Partition {
  std::vector<int> labels;
};

/// pi(j) = ((j-1) mod k) + 1 for 1-based j; requires k | n.
Partition round_robin_partition(int battlefields, int players);

/// Relative tolerance on each group's share of the total value.
inline constexpr double kPartitionBalanceTol = 1e-9;

/// Accepts iff every group's value sum equals V/k within relative 1e-9.
/// Continuous games only. Throws LabelOutOfRange or UnbalancedPartition.
Partition validate_partition(const ValidatedGame& game, const Partition& pi);

/// One equilibrium bid vector: A_j = budget * (k v_j / V) * X_{pi(j)} with
/// X ~ Dir(1/(k-1),...,1/(k-1)). The bids sum to the budget on every draw
/// and each A_j follows budget * (k v_j / V) * Beta(1/(k-1), 1).
std::vector<double> sample_partition_equilibrium(const ValidatedGame& game,
                                                 const Partition& pi,
                                                 RngStream& stream);

}  // namespace blotto
