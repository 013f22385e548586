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

// Instance generators and counting bounds.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropdiff/support.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

/// Uniform integer in [lo, hi] from a 64-bit Mersenne twister draw. Unlike
/// std::uniform_int_distribution the result is identical on every platform.
std::int64_t portable_draw(std::uint64_t raw, std::int64_t lo, std::int64_t hi);

struct GeneratorOptions {
  std::uint64_t seed = 1;
  int max_tries = 10'000;
};

/// A 2x2 generic regular system with u increasing and v decreasing in the
/// first equation, the reverse in the second, and a_{0,v,1} < a_{0,u,1},
/// a_{0,u,2} < a_{0,v,2}. Increasing blocks rise by at least `step` per
/// index. Throws UsageError for step < 2 or orders < 1, ResourceError when no
/// generic regular jitter is found within the retry budget.
TldeSystem construct_n2(Int k_u, Int k_v, Int base, Int step, const GeneratorOptions& opts = {});

/// Unknown indices are 0-based. `family` holds p_1 < ... < p_s with cyclic
/// gaps of at least 2 (p_1 + n - p_s >= 2 included).
struct LowerBoundPlan {
  std::size_t n = 0;
  std::vector<Int> orders;
  std::vector<std::size_t> family;

  // Throws UsageError when the plan is malformed.
  void validate() const;
};

/// An n x n generic regular system in which block l of equation l decreases,
/// block l+1 (mod n) of equation l increases by at least `step`, starts above
/// a_{0,l,l}, and every other block of equation l exceeds
/// a_{k_{l+1},l+1,l} + k_j entrywise.
TldeSystem construct_lower(const LowerBoundPlan& plan, Int base, Int step, const GeneratorOptions& opts = {});

/// prod_{p in family} k_p(k_p+1)/2 * prod_{r not in family or family-1} k_r.
std::uint64_t expected_lower_count(const LowerBoundPlan& plan);

/// The low parts of the solutions promised for `plan`: k_p receives two low
/// exponents i1 <= i2 (one when equal), its cyclic predecessor none, every
/// other unknown one.
std::vector<std::vector<Support>> promised_low_parts(const LowerBoundPlan& plan);

/// Rejection-samples an n x n generic regular system with coefficients in
/// [lo, hi]. Deterministic for a fixed seed.
TldeSystem random_system(std::size_t n, const std::vector<Int>& orders, Int lo, Int hi,
                         const GeneratorOptions& opts = {});

/// sum over d_1+...+d_n <= n of prod_j C(k_j + d_j - 1, d_j).
std::uint64_t naive_upper_bound(const std::vector<Int>& orders);

/// (k_u + k_v)(k_u + k_v + 1) / 2
std::uint64_t sharp_bound_n2(Int k_u, Int k_v);

/// 2 (k_1+...+k_n)^n / (n * n!) in lowest terms; the true bound adds terms of
/// lower order in the sum of orders.
struct LeadingTerm {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool plus_lower_order = true;
  bool operator==(const LeadingTerm&) const = default;
};

LeadingTerm leading_upper(std::size_t n, const std::vector<Int>& orders);

}  // namespace tropdiff
