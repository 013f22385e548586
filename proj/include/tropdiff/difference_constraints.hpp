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

// Feasibility of integer difference constraints x_a - x_b <= w.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropdiff/ext_int.hpp"

namespace tropdiff {

/// Variables 1..n plus the reference x_0 = 0. Bounds on single variables are
/// constraints against the reference.
class DifferenceSystem {
 public:
  explicit DifferenceSystem(std::size_t vars);

  std::size_t vars() const { return n_ - 1; }

  // x_a - x_b <= w
  void add_le(std::size_t a, std::size_t b, Int w);
  void add_upper(std::size_t v, Int c) { add_le(v, 0, c); }
  void add_lower(std::size_t v, Int c) { add_le(0, v, checked_sub(0, c)); }
  void add_fix(std::size_t v, Int c) {
    add_upper(v, c);
    add_lower(v, c);
  }
  void add_diff_eq(std::size_t a, std::size_t b, Int c) {
    add_le(a, b, c);
    add_le(b, a, checked_sub(0, c));
  }

  // All-pairs shortest paths of the constraint graph (edge b -> a with
  // weight w per constraint). Empty iff there is a negative cycle, which is
  // exactly infeasibility over the integers.
  bool solve();

  bool feasible() const { return feasible_; }
  // Tightest implied bounds; valid after a successful solve().
  ExtInt upper(std::size_t v) const { return dist_[0][v]; }
  std::optional<Int> lower(std::size_t v) const;
  ExtInt max_diff(std::size_t a, std::size_t b) const { return dist_[b][a]; }

 private:
  std::size_t n_;
  std::vector<std::vector<ExtInt>> w_;
  std::vector<std::vector<ExtInt>> dist_;
  bool feasible_ = false;
};

}  // namespace tropdiff
