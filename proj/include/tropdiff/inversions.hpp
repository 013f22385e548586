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

// Inversions of families of permutations. Positions are 0-based: a
// permutation of [r] is a vector holding w(0), ..., w(r-1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tropdiff {

using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t r);
Perm reversal_perm(std::size_t r);
Perm inverse(const Perm& w);
// (a o b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
bool is_permutation(const Perm& w);

struct PermFamily {
  std::size_t r = 0;
  std::vector<Perm> perms;

  PermFamily() = default;
  // Throws UsageError unless every entry is a permutation of the same [r].
  explicit PermFamily(std::vector<Perm> ps);

  std::size_t n() const { return perms.size(); }
  PermFamily without(std::size_t j) const;
};

/// The tuple element whose image under w is smallest.
std::size_t m_of(const Perm& w, std::span<const std::size_t> tuple);

/// True iff m_of(w_1), ..., m_of(w_n) are pairwise distinct.
bool is_inversion(const PermFamily& f, std::span<const std::size_t> tuple);

/// Advances `c` to the next k-subset of [r] in colex order; false after the
/// last one. Start from {0, ..., k-1}.
bool next_colex(std::vector<std::size_t>& c, std::size_t r);

std::uint64_t count_inversions(const PermFamily& f);

/// Classical inversion number of w: pairs i < j with w(i) > w(j).
std::uint64_t classical_inversions(const Perm& w);

struct InversionSearchOptions {
  unsigned jobs = 1;
  std::uint64_t max_families = 50'000'000;
};

/// Exact maximum of count_inversions over all families of n permutations of
/// [r], with w_1 fixed to the identity.
std::uint64_t max_inversions(std::size_t n, std::size_t r, const InversionSearchOptions& opts = {});

/// The indices j such that `subtuple` is an inversion of the family without
/// w_j.
std::vector<std::size_t> cut_witness(const PermFamily& f, std::span<const std::size_t> subtuple);

/// Every permutation of [r] in lexicographic order.
std::vector<Perm> all_perms(std::size_t r);

}  // namespace tropdiff
