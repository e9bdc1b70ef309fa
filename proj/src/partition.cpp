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

#include "blotto/partition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "blotto/errors.hpp"
#include "blotto/samplers.hpp"

namespace blotto {

Partition round_robin_partition(int battlefields, int players) {
  if (players < 1 || battlefields < 1 || battlefields % players != 0) {
    fail(ErrorCode::NotDivisible,
         std::to_string(players) + " does not divide " +
             std::to_string(battlefields));
  }
  Partition pi;
  pi.labels.resize(battlefields);
  for (int j = 0; j < battlefields; ++j) pi.labels[j] = j % players + 1;
  return pi;
}

Partition validate_partition(const ValidatedGame& game, const Partition& pi) {
  if (game.variant() != Variant::Continuous) {
    throw std::invalid_argument("partitions apply to continuous games");
  }
  const int k = game.players();
  const int n = game.battlefields();
  if (static_cast<int>(pi.labels.size()) != n) {
    fail(ErrorCode::DimensionMismatch,
         "partition has " + std::to_string(pi.labels.size()) +
             " labels, expected " + std::to_string(n));
  }
  std::vector<double> group_value(k, 0.0);
  for (int j = 0; j < n; ++j) {
    const int label = pi.labels[j];
    if (label < 1 || label > k) {
      fail(ErrorCode::LabelOutOfRange,
           "label " + std::to_string(label) + " at battlefield " +
               std::to_string(j + 1) + " outside {1.." + std::to_string(k) +
               "}");
    }
    group_value[label - 1] += game.value(j);
  }
  const double target = game.total_value() / k;
  int worst = 0;
  double worst_dev = 0.0;
  for (int m = 0; m < k; ++m) {
    const double dev = std::abs(group_value[m] - target);
    if (dev > worst_dev) {
      worst_dev = dev;
      worst = m;
    }
  }
  if (worst_dev > kPartitionBalanceTol * target) {
    fail(ErrorCode::UnbalancedPartition,
         "group " + std::to_string(worst + 1) + " sums to " +
             std::to_string(group_value[worst]) + ", expected " +
             std::to_string(target));
  }
  return pi;
}

std::vector<double> sample_partition_equilibrium(const ValidatedGame& game,
                                                 const Partition& pi,
                                                 RngStream& stream) {
  const int k = game.players();
  const int n = game.battlefields();
  const double alpha = 1.0 / (k - 1);
  const auto x = dirichlet_symmetric(k, alpha, stream);
  // Shared per-group coefficient keeps bids within a group exactly
  // proportional to the battlefield values.
  std::vector<double> coeff(k);
  const double common = game.budget() * k / game.total_value();
  for (int m = 0; m < k; ++m) coeff[m] = common * x[m];
  std::vector<double> bids(n);
  for (int j = 0; j < n; ++j) bids[j] = coeff[pi.labels[j] - 1] * game.value(j);
  return bids;
}

}  // namespace blotto
