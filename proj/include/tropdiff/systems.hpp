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

// Systems of equations sharing unknowns and orders.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropdiff/solution_set.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

/// The n! sums of A_{k_sigma(l),sigma(l)}(P_l) are pairwise distinct, and for
/// every unknown j and equations l1 != l2 the value sets
/// { A_{k_j,j}(P_l) - A_{alpha,j'}(P_l) : j', alpha < k_j' } are disjoint.
/// Throws UsageError for a non-square system.
bool is_generic(const TldeSystem& sys);

/// Every equation is regular (is_regular_1 or is_regular_n).
bool is_regular_system(const TldeSystem& sys);

enum class ConstraintKind {
  kFix,        // q_a = c
  kDifference, // q_a - q_b = c
  kDiffUpper,  // q_a - q_b <= c
  kLower,      // q_a >= c
  kUpper,      // q_a <= c
};

/// One linear condition on the high exponents q_j produced while choosing
/// which two terms of an equation attain its minimum.
struct BranchConstraint {
  ConstraintKind kind = ConstraintKind::kLower;
  std::size_t a = 0;
  std::size_t b = 0;
  Int c = 0;
  std::size_t equation = 0;
  // The two attaining terms: an unknown index, or -1 for the constant part.
  int witness_first = -1;
  int witness_second = -1;
};

/// A choice of low exponents per unknown and of the unknowns that carry one
/// high exponent q_j >= k_j.
struct LowChoice {
  std::vector<Support> low;
  std::vector<std::size_t> high;
};

/// Every way of making each equation vanish for the given choice, as lists of
/// constraints. Branches in which some unknown of `high` never attains a
/// minimum are omitted, since they cannot yield minimal solutions.
std::vector<std::vector<BranchConstraint>> branches(const TldeSystem& sys, const LowChoice& choice);

struct SolveOptions {
  std::uint64_t node_budget = 200'000'000;
  unsigned jobs = 1;
  // For square generic regular systems, only enumerate choices where every
  // unknown has a high exponent and at most n low exponents in total. Holds
  // on every tested 2x2 system but misses solutions of some 3x3 ones, so it
  // is off by default.
  bool prune = false;
};

/// Exact minimal solutions of a system of any shape. Throws ResourceError
/// when the node budget is exhausted.
SolutionSet solve_system(const TldeSystem& sys, const SolveOptions& opts = {});

/// No rays and no multi-parameter families.
bool is_holonomic_system(const TldeSystem& sys, const SolveOptions& opts = {});

enum class TypeN2 { kUV, kUU, kVV, kU, kV };
std::string to_string(TypeN2 t);

/// Type of a minimal solution of a 2x2 system plus the sign diagnostics.
struct SolutionTypeN2 {
  TypeN2 label = TypeN2::kUV;
  // attaining[l][j]: elements of S_j at which the minimum of equation l is
  // attained.
  std::vector<std::vector<Support>> attaining;
  // A_{u1} - A_{u2} - A_{v1} + A_{v2}, with A_{jl} = A_{k_j,j}(P_l).
  Int a = 0;
  // For each low element x of S_u: A_{x,u}(P_2) - A_{x,u}(P_1) - A_{v2} + A_{v1};
  // for each low element of S_v the same with u and v swapped.
  std::vector<std::pair<Int, Int>> a_prime_u;
  std::vector<std::pair<Int, Int>> a_prime_v;
  // The sign pattern expected for the attaining-set shape holds.
  bool rigidity_consistent = true;
};

/// Throws UsageError unless sys is 2x2 and s is a minimal solution whose
/// low exponents fit one of the five shapes.
SolutionTypeN2 classify_solution_n2(const TldeSystem& sys, const MultiSupport& s);

}  // namespace tropdiff
