// Copyright 2026 The tropdiff Authors
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

#include "tropdiff/difference_constraints.hpp"

#include <algorithm>

#include "tropdiff/errors.hpp"

namespace tropdiff {

DifferenceSystem::DifferenceSystem(std::size_t vars)
    : n_(vars + 1), w_(n_, std::vector<ExtInt>(n_, ExtInt::infinity())) {
  for (std::size_t i = 0; i < n_; ++i) w_[i][i] = 0;
}

void DifferenceSystem::add_le(std::size_t a, std::size_t b, Int w) {
  if (a >= n_ || b >= n_) throw UsageError("difference constraint: variable out of range");
  // x_a <= x_b + w: edge b -> a.
  w_[b][a] = std::min(w_[b][a], ExtInt(w));
}

bool DifferenceSystem::solve() {
  dist_ = w_;
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (dist_[i][k].is_infinite()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const ExtInt via = dist_[i][k] + dist_[k][j];
        if (via < dist_[i][j]) dist_[i][j] = via;
      }
    }
  }
  feasible_ = true;
  for (std::size_t i = 0; i < n_; ++i) {
    if (dist_[i][i] < ExtInt(0)) feasible_ = false;
  }
  return feasible_;
}

std::optional<Int> DifferenceSystem::lower(std::size_t v) const {
  const ExtInt d = dist_[v][0];
  if (d.is_infinite()) return std::nullopt;
  return checked_sub(0, d.value());
}

}  // namespace tropdiff
