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

// One equation in one unknown. Every function here requires
// p.unknowns() == 1 and throws UsageError otherwise.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tropdiff/solution_set.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

/// False iff the minimum defining A_k is attained at two or more indices,
/// i.e. {k} and all its shifts are solutions.
bool is_holonomic(const Tlde& p);

/// False iff a_i - i > a_0 for every 1 <= i <= k.
bool has_nonzero_solution(const Tlde& p);

/// The partner q >= k of a low exponent p < k, computed as
/// A_p - min_{p<i<=k}(a_i - i). Empty when that value is below k or when {p}
/// is itself a solution. Meaningful for holonomic equations.
/// Throws UsageError when p is outside [0, k).
std::optional<Int> q_of_p(const Tlde& p, Int low);

/// Finite part and rays of the minimal solutions.
SolutionSet minimal_solutions_1(const Tlde& p);

/// Every A_j (0 <= j <= k) has a unique minimizing index, and A_0..A_{k-1}
/// are pairwise distinct.
bool is_regular_1(const Tlde& p);

struct ConcretePair {
  Int p;
  Int q;
  auto operator<=>(const ConcretePair&) const = default;
};

// {p, ★}: the unique partner q(p) >= k.
struct StarEntry {
  Int p;
  Int q;
  auto operator<=>(const StarEntry&) const = default;
};

struct Singleton {
  Int j;
  auto operator<=>(const Singleton&) const = default;
};

using ConfigEntry = std::variant<ConcretePair, StarEntry, Singleton>;

struct Configuration {
  std::vector<ConfigEntry> entries;
  bool operator==(const Configuration&) const = default;
};

/// The combinatorial type of the minimal-solution set. Throws UsageError for
/// non-holonomic input.
Configuration configuration(const Tlde& p);

/// Minimal solutions at infinity: supports S in Z<=0 for which the maximum of
/// a_i + val^inf_S(i) is attained twice.
struct InfinitySolutions {
  bool negative_ray = false;    // every {-r}, r >= 1
  std::optional<Int> pair_r;    // {0, -r}
  bool empty() const { return !negative_ray && !pair_r; }
  bool operator==(const InfinitySolutions&) const = default;
};

InfinitySolutions infinity_solutions(const Tlde& p);

}  // namespace tropdiff
