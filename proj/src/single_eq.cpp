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

#include "tropdiff/single_eq.hpp"

#include <algorithm>
#include <set>

#include "tropdiff/core.hpp"
#include "tropdiff/errors.hpp"

namespace tropdiff {

namespace {

void require_single(const Tlde& p) {
  if (p.unknowns() != 1) throw UsageError("expected an equation in one unknown");
}

// min_{lo<=i<=hi} (a_i - i) with multiplicity.
MinCount shifted_min(const Tlde& p, Int lo, Int hi) {
  MinCount mc{0, 0};
  for (Int i = lo; i <= hi; ++i) {
    const Int v = checked_sub(p.coeff(static_cast<std::size_t>(i), 0), i);
    if (mc.count == 0 || v < mc.value) {
      mc = {v, 1};
    } else if (v == mc.value) {
      ++mc.count;
    }
  }
  return mc;
}

bool singleton_solves(const Tlde& p, Int j) { return a_value_min(p, 0, j).count >= 2; }

MultiSupport one(std::initializer_list<Int> xs) { return MultiSupport({Support(xs)}); }

}  // namespace

bool is_holonomic(const Tlde& p) {
  require_single(p);
  return a_value_min(p, 0, p.order(0)).count == 1;
}

bool has_nonzero_solution(const Tlde& p) {
  require_single(p);
  const Int a0 = p.coeff(0, 0);
  for (Int i = 1; i <= p.order(0); ++i) {
    if (p.coeff(static_cast<std::size_t>(i), 0) - i <= a0) return true;
  }
  return false;
}

std::optional<Int> q_of_p(const Tlde& p, Int low) {
  require_single(p);
  const Int k = p.order(0);
  if (low < 0 || low >= k) throw UsageError("q_of_p: p must lie in [0, k)");
  const MinCount ap = a_value_min(p, 0, low);
  if (ap.count >= 2) return std::nullopt;
  const Int q = checked_sub(ap.value, shifted_min(p, low + 1, k).value);
  if (q < k) return std::nullopt;
  return q;
}

SolutionSet minimal_solutions_1(const Tlde& p) {
  require_single(p);
  const Int k = p.order(0);
  SolutionSet out;
  const bool holonomic = is_holonomic(p);
  if (!holonomic) out.rays.push_back({one({k})});

  std::vector<bool> single(static_cast<std::size_t>(k));
  for (Int j = 0; j < k; ++j) {
    single[static_cast<std::size_t>(j)] = singleton_solves(p, j);
    if (single[static_cast<std::size_t>(j)]) out.finite.push_back(one({j}));
  }
  for (Int a = 0; a < k; ++a) {
    if (single[static_cast<std::size_t>(a)]) continue;
    for (Int b = a + 1; b < k; ++b) {
      if (single[static_cast<std::size_t>(b)]) continue;
      // The pair evaluates to min(A_a, A_b); neither is doubled on its own.
      if (a_value(p, 0, a) == a_value(p, 0, b)) out.finite.push_back(one({a, b}));
    }
    if (holonomic) {
      if (auto q = q_of_p(p, a)) out.finite.push_back(one({a, *q}));
    }
  }
  out.canonicalize();
  return out;
}

bool is_regular_1(const Tlde& p) {
  require_single(p);
  const Int k = p.order(0);
  std::set<Int> seen;
  for (Int j = 0; j <= k; ++j) {
    const MinCount mc = a_value_min(p, 0, j);
    if (mc.count != 1) return false;
    if (j < k && !seen.insert(mc.value).second) return false;
  }
  return true;
}

Configuration configuration(const Tlde& p) {
  require_single(p);
  if (!is_holonomic(p)) throw UsageError("configuration requires a holonomic equation");
  const Int k = p.order(0);
  Configuration c;
  for (const auto& s : minimal_solutions_1(p).finite) {
    const auto e = s.part(0).elems();
    if (e.size() == 1) {
      c.entries.emplace_back(Singleton{e[0]});
    } else if (e[1] >= k) {
      c.entries.emplace_back(StarEntry{e[0], e[1]});
    } else {
      c.entries.emplace_back(ConcretePair{e[0], e[1]});
    }
  }
  return c;
}

InfinitySolutions infinity_solutions(const Tlde& p) {
  require_single(p);
  Int best = 0;
  int count = 0;
  for (Int i = 0; i <= p.order(0); ++i) {
    const Int v = checked_sub(p.coeff(static_cast<std::size_t>(i), 0), i);
    if (count == 0 || v > best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  InfinitySolutions out;
  out.negative_ray = count >= 2;
  const Int r = checked_sub(best, p.coeff(0, 0));
  if (r >= 1 && !out.negative_ray) out.pair_r = r;
  return out;
}

}  // namespace tropdiff
