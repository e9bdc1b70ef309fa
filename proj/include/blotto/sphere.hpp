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

#include <functional>
#include <span>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/rng.hpp"

namespace blotto {

/// n x m matrix with orthonormal columns and prescribed squared row norms.
struct Isometry {
  int rows = 0;
  int cols = 0;
  std::vector<double> m;        // row-major
  std::vector<double> targets;  // s_j, the intended squared row norms

  double entry(int r, int c) const { return m[r * cols + c]; }
  double row_norm2(int r) const;
};

/// Output of one plane rotation of a pair of orthogonal rows. hit1/hit2
/// record which squared-norm target the rotation met exactly; at least one
/// is always set, and the algebra (not a float comparison) decides which.
struct RotationResult {
  std::vector<double> w1, w2;
  bool hit1 = false;
  bool hit2 = false;
  double norm1 = 0.0;  // ||w1||^2 by the rotation algebra
  double norm2 = 0.0;  // ||w2||^2 by the rotation algebra
};

/// Rotates (u1, u2) with u1.u2 = 0 and ||u1||^2 >= t1 >= t2 >= ||u2||^2 so
/// that span, Gram matrix (W W^T = U U^T) and the norm ordering against the
/// targets are preserved, and one target is met exactly. Inputs may miss the
/// ordering by up to 1e-12; beyond that, PreconditionViolated.
RotationResult rotate_pair(const std::vector<double>& u1,
                           const std::vector<double>& u2, double t1, double t2);

/// Working state passed to a construction observer at the top of every
/// rotation step. The matrix and targets are in the internal (permuted)
/// order; j and l are the 0-based row cursors.
struct ConstructStep {
  std::span<const double> matrix;  // row-major, rows x cols
  std::span<const double> targets;
  int rows = 0;
  int cols = 0;
  int j = 0;
  int l = 0;
};
using ConstructObserver = std::function<void(const ConstructStep&)>;

/// Builds an n x m isometry with squared row norms s_j, for s_j in [0,1]
/// summing to m. O(nm): one top-m selection pass, then at most n plane
/// rotations driven by rotate_pair hit flags.
Isometry construct_m(const std::vector<double>& s, int m,
                     const ConstructObserver* observer = nullptr);

/// Three-player equilibrium sampler. Builds the isometry for s = 3v/V once;
/// each sample maps a uniform sphere point U to bids budget * (M_j . U)^2,
/// which sum to the budget and follow budget * (3 v_j / V) * Beta(1/2, 1).
class SphereSampler {
 public:
  explicit SphereSampler(const ValidatedGame& game);
  /// Testing hook: run the sampler through a caller-supplied isometry.
  SphereSampler(const ValidatedGame& game, Isometry isometry);

  const Isometry& isometry() const { return isometry_; }
  std::vector<double> sample(RngStream& stream) const;

 private:
  double budget_ = 0.0;
  Isometry isometry_;
};

}  // namespace blotto
