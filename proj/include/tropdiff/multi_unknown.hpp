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

// One equation in n > 1 unknowns.

#pragma once

#include <cstddef>
#include <vector>

#include "tropdiff/solution_set.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

/// Indices j whose block equation P_j is non-holonomic.
std::vector<std::size_t> loops(const Tlde& p);

struct Circuit {
  std::vector<std::size_t> support;  // one index (a loop) or two
  Int valuation = 0;
  auto operator<=>(const Circuit&) const = default;
};

/// Loops plus all 2-subsets of the non-loops, with valuation k_j on a loop
/// and |A_{k_a,a} - A_{k_b,b}| on a pair.
struct CircuitMatroid {
  std::size_t ground = 0;
  std::vector<std::size_t> loops;
  std::vector<Circuit> circuits;
  bool operator==(const CircuitMatroid&) const = default;
};

CircuitMatroid circuit_matroid(const Tlde& p);

/// One ray t_j^{k_j} per loop; one ray per non-loop pair, with the offset
/// |A_a - A_b| carried by the side with the smaller A-value.
std::vector<ShiftRay> ray_solutions(const Tlde& p);

/// Rays plus the finite part: embedded block solutions and cross pairs.
SolutionSet minimal_solutions_n(const Tlde& p);

/// Every block is regular and the values A_{alpha,j}, alpha < k_j, over all j
/// are pairwise distinct.
bool is_regular_n(const Tlde& p);

}  // namespace tropdiff
