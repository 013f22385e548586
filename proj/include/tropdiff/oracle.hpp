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

// Brute-force enumeration over a bounded exponent box. Independent of the
// structural solvers; used as ground truth in tests and `verify`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropdiff/support.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

struct SearchBox {
  std::vector<Int> cap;                // exponents of unknown j lie in [0, cap[j]]
  std::vector<std::size_t> part_size;  // at most this many exponents per unknown
  std::size_t total_size = 0;          // at most this many exponents overall
};

/// cap_j = 2 max k + (max coeff - min coeff) + 1 for every j, per-part and
/// total size 2m. An over-approximation for systems; see README.
SearchBox auto_box(const TldeSystem& sys);

/// Same box with every cap raised to at least `min_cap`.
SearchBox widened(SearchBox box, Int min_cap);

struct OracleLimits {
  std::uint64_t max_candidates = 100'000'000;
};

/// Number of candidate tuples the box contains (saturating).
std::uint64_t candidate_count(const SearchBox& box);

/// Every nonzero tuple in the box solving all equations, ordered by total
/// size and then lexicographically. Throws ResourceError when the box holds
/// more than limits.max_candidates tuples.
std::vector<MultiSupport> oracle_solutions(const TldeSystem& sys, const SearchBox& box,
                                           const OracleLimits& limits = {});

/// The inclusion-minimal elements of oracle_solutions, same order.
std::vector<MultiSupport> oracle_minimal(const TldeSystem& sys, const SearchBox& box,
                                         const OracleLimits& limits = {});

/// Minimal subsets S of {0, -1, ..., -depth} for which the maximum of
/// a_i + val^inf_S(i) is attained at least twice, where val^inf_S(0) = max S
/// and val^inf_S(i) = max{ s - i : s in S, s <= -1 } for i >= 1. Elements are
/// returned as nonpositive integers, sorted ascending within each set.
std::vector<std::vector<Int>> oracle_infinity(const Tlde& p, Int depth);

}  // namespace tropdiff
