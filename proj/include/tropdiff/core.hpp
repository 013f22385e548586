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

// Vanishing predicates, valuations and evaluation of equations on supports.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropdiff/ext_int.hpp"
#include "tropdiff/support.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

/// True iff every term is ∞ or the finite minimum occurs at least twice.
/// Throws UsageError on an empty list.
bool vanishes(std::span<const ExtInt> terms);

/// True iff some finite value occurs at least twice (not necessarily the
/// minimum). Throws UsageError on an empty list.
bool vanishes_weakly(std::span<const ExtInt> terms);

/// min{ s - i : s in S, s >= i }, or ∞. The order of the i-th derivative of a
/// series supported on S.
ExtInt val(const Support& s, Int i);

/// The term list a_{i,j} + val(S_j, i) in block-major order.
std::vector<ExtInt> term_values(const Tlde& p, const MultiSupport& s);

/// Minimum of term_values; ∞ exactly for the zero tuple.
ExtInt trop_eval(const Tlde& p, const MultiSupport& s);

bool is_solution(const Tlde& p, const MultiSupport& s);
bool is_solution(const TldeSystem& sys, const MultiSupport& s);

/// True iff `s` is a non-zero solution none of whose proper non-zero
/// sub-tuples is a solution. Checks every sub-tuple; meant for the small
/// supports that minimal solutions have.
bool is_minimal_solution(const TldeSystem& sys, const MultiSupport& s);
bool is_minimal_solution(const Tlde& p, const MultiSupport& s);

/// Minimum of a finite term list together with how often it occurs.
struct MinCount {
  Int value = 0;
  int count = 0;
};

/// A_{alpha,j}(P) = trop_P(t_j^alpha) = min_{0<=i<=min(alpha,k_j)} {a_{i,j} + alpha - i}.
Int a_value(const Tlde& p, std::size_t j, Int alpha);

/// Same value as a_value plus the number of indices i attaining it.
MinCount a_value_min(const Tlde& p, std::size_t j, Int alpha);

}  // namespace tropdiff
