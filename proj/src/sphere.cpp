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

#include "blotto/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blotto/errors.hpp"
#include "blotto/samplers.hpp"

namespace blotto {
namespace {

constexpr double kOrthoTol = 1e-9;
constexpr double kOrderSlack = 1e-12;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
  return d;
}

}  // namespace

double Isometry::row_norm2(int r) const {
  double d = 0.0;
  for (int c = 0; c < cols; ++c) d += entry(r, c) * entry(r, c);
  return d;
}

RotationResult rotate_pair(const std::vector<double>& u1,
                           const std::vector<double>& u2, double t1,
                           double t2) {
  if (u1.size() != u2.size()) {
    fail(ErrorCode::PreconditionViolated, "rotate_pair dimension mismatch");
  }
  const double n1 = dot(u1, u1);
  const double n2 = dot(u2, u2);
  const double d = dot(u1, u2);
  if (std::abs(d) > kOrthoTol * std::sqrt(n1 * n2)) {
    fail(ErrorCode::PreconditionViolated, "rotate_pair inputs not orthogonal");
  }
  if (t1 > n1 + kOrderSlack || t2 < n2 - kOrderSlack || t2 > t1 + kOrderSlack) {
    fail(ErrorCode::PreconditionViolated,
         "rotate_pair needs ||u1||^2 >= t1 >= t2 >= ||u2||^2");
  }
  t1 = std::min(t1, n1);
  t2 = std::max(t2, n2);
  t2 = std::min(t2, t1);

  RotationResult out;
  if (n1 == n2) {
    // The preconditions force t1 = t2 = ||u1||^2 here, and the generic
    // branches would divide by zero; the identity rotation is the answer.
    out.w1 = u1;
    out.w2 = u2;
    out.hit1 = out.hit2 = true;
    out.norm1 = n1;
    out.norm2 = n2;
    return out;
  }

  const double denom = n1 - n2;  // > 0
  double a, b;
  if (n1 - t1 >= t2 - n2) {
    // w2 lands on t2 exactly; w1 absorbs the rest of the Gram mass.
    a = std::sqrt((n1 - t2) / denom);
    b = std::sqrt(1.0 - a * a);
    out.hit2 = true;
    out.norm1 = n1 + n2 - t2;
    out.norm2 = t2;
  } else {
    // w1 lands on t1 exactly.
    a = std::sqrt((t1 - n2) / denom);
    b = std::sqrt(1.0 - a * a);
    out.hit1 = true;
    out.norm1 = t1;
    out.norm2 = n1 + n2 - t1;
  }
  const std::size_t m = u1.size();
  out.w1.resize(m);
  out.w2.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.w1[i] = a * u1[i] - b * u2[i];
    out.w2[i] = b * u1[i] + a * u2[i];
  }
  return out;
}

Isometry construct_m(const std::vector<double>& s_in, int m,
                     const ConstructObserver* observer) {
  const int n = static_cast<int>(s_in.size());
  if (m < 1 || n < m) {
    fail(ErrorCode::TargetOutOfRange,
         "need at least m rows, got n=" + std::to_string(n) +
             " for m=" + std::to_string(m));
  }
  std::vector<double> s = s_in;
  double total = 0.0;
  for (double& v : s) {
    if (v < -1e-9 || v > 1.0 + 1e-9) {
      fail(ErrorCode::TargetOutOfRange,
           "row-norm target " + std::to_string(v) + " outside [0,1]");
    }
    v = std::clamp(v, 0.0, 1.0);
    total += v;
  }
  if (std::abs(total - m) > 1e-9) {
    fail(ErrorCode::SumMismatch, "targets sum to " + std::to_string(total) +
                                     ", expected " + std::to_string(m));
  }
  // Pin the sum to m so the trace identity that drives the untouched rows
  // to their targets holds at working precision.
  const double rescale = static_cast<double>(m) / total;
  for (double& v : s) v = std::min(1.0, v * rescale);

  // Move the m largest targets to the front; everything below runs in this
  // working order and the permutation is undone on return.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::nth_element(order.begin(), order.begin() + (m - 1), order.end(),
                   [&](int a, int b) { return s[a] > s[b]; });
  std::vector<double> st(n);
  for (int r = 0; r < n; ++r) st[r] = s[order[r]];

  std::vector<double> mat(static_cast<std::size_t>(n) * m, 0.0);
  for (int i = 0; i < m; ++i) mat[static_cast<std::size_t>(i) * m + i] = 1.0;

  std::vector<double> u1(m), u2(m);
  int j = 0, l = m;
  int steps = 0;
  while (j < m && l < n) {
    if (observer != nullptr) {
      ConstructStep step;
      step.matrix = std::span<const double>(mat);
      step.targets = std::span<const double>(st);
      step.rows = n;
      step.cols = m;
      step.j = j;
      step.l = l;
      (*observer)(step);
    }
    for (int c = 0; c < m; ++c) {
      u1[c] = mat[static_cast<std::size_t>(j) * m + c];
      u2[c] = mat[static_cast<std::size_t>(l) * m + c];
    }
    const RotationResult rot = rotate_pair(u1, u2, st[j], st[l]);
    for (int c = 0; c < m; ++c) {
      mat[static_cast<std::size_t>(j) * m + c] = rot.w1[c];
      mat[static_cast<std::size_t>(l) * m + c] = rot.w2[c];
    }
    if (rot.hit1) ++j;
    if (rot.hit2) ++l;
    if (++steps > n + m) {
      throw std::logic_error("construct_m failed to advance");
    }
  }

  Isometry out;
  out.rows = n;
  out.cols = m;
  out.m.resize(mat.size());
  out.targets.resize(n);
  for (int r = 0; r < n; ++r) {
    const int original = order[r];
    out.targets[original] = st[r];
    for (int c = 0; c < m; ++c) {
      out.m[static_cast<std::size_t>(original) * m + c] =
          mat[static_cast<std::size_t>(r) * m + c];
    }
  }
  return out;
}

SphereSampler::SphereSampler(const ValidatedGame& game)
    : budget_(game.budget()) {
  if (game.variant() != Variant::Continuous) {
    throw std::invalid_argument("sphere sampler needs a continuous game");
  }
  if (game.players() != 3) {
    fail(ErrorCode::WrongPlayerCount,
         "sphere construction applies to 3 players, got " +
             std::to_string(game.players()));
  }
  const double v_total = game.total_value();
  const double cap = v_total / 3.0 + 1e-12 * v_total;
  std::vector<double> s(game.battlefields());
  for (int j = 0; j < game.battlefields(); ++j) {
    const double v = game.value(j);
    if (v > cap) {
      fail(ErrorCode::ValueTooLarge,
           "battlefield " + std::to_string(j + 1) + " value " +
               std::to_string(v) + " exceeds V/3 = " +
               std::to_string(v_total / 3.0));
    }
    s[j] = std::min(1.0, 3.0 * v / v_total);
  }
  isometry_ = construct_m(s, 3);
}

SphereSampler::SphereSampler(const ValidatedGame& game, Isometry isometry)
    : budget_(game.budget()), isometry_(std::move(isometry)) {
  if (isometry_.rows != game.battlefields() || isometry_.cols != 3) {
    fail(ErrorCode::DimensionMismatch, "isometry shape does not fit the game");
  }
}

std::vector<double> SphereSampler::sample(RngStream& stream) const {
  const auto u = unit_sphere3(stream);
  std::vector<double> bids(isometry_.rows);
  for (int j = 0; j < isometry_.rows; ++j) {
    const double* row = &isometry_.m[static_cast<std::size_t>(j) * 3];
    const double p = row[0] * u[0] + row[1] * u[1] + row[2] * u[2];
    bids[j] = budget_ * p * p;
  }
  return bids;
}

}  // namespace blotto
