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

// Solution sets: a finite part plus shift-invariant infinite families.

#pragma once

#include <cstddef>
#include <vector>

#include "tropdiff/support.hpp"

namespace tropdiff {

/// The orbit { i ⊙ base : i >= 0 }, where i ⊙ S adds i to every exponent.
struct ShiftRay {
  MultiSupport base;

  MultiSupport member(Int i) const { return base.shifted(i); }
  bool contains(const MultiSupport& s) const;

  auto operator<=>(const ShiftRay&) const = default;
  bool operator==(const ShiftRay&) const = default;
};

/// A multi-parameter family produced by the system solver. Every part j in
/// some group holds a single high exponent; member(c) adds c_1+...+c_t to the
/// top exponent of each part in groups[t-1] (groups are nested, outermost
/// first). Only the low exponents stay fixed.
struct RayFamily {
  MultiSupport base;
  std::vector<std::vector<std::size_t>> groups;

  MultiSupport member(const std::vector<Int>& steps) const;
  bool contains(const MultiSupport& s) const;

  auto operator<=>(const RayFamily&) const = default;
  bool operator==(const RayFamily&) const = default;
};

/// Minimal solutions: the finite part F plus ray generators modulo shifts.
struct SolutionSet {
  std::vector<MultiSupport> finite;
  std::vector<ShiftRay> rays;
  std::vector<RayFamily> families;

  bool holonomic() const { return rays.empty() && families.empty(); }

  // True iff `s` is a listed finite element or a member of a ray or family.
  bool contains(const MultiSupport& s) const;

  // Sorts and deduplicates every list.
  void canonicalize();

  // Finite elements plus every infinite member whose largest exponent is at
  // most `max_exponent`, sorted and deduplicated.
  std::vector<MultiSupport> expand(Int max_exponent) const;

  bool operator==(const SolutionSet&) const = default;
};

}  // namespace tropdiff
