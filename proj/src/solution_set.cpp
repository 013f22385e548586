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

#include "tropdiff/solution_set.hpp"

#include <algorithm>
#include <functional>

namespace tropdiff {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool ShiftRay::contains(const MultiSupport& s) const {
  if (s.arity() != base.arity() || base.is_zero()) return false;
  const Int d = s.max_exponent() - base.max_exponent();
  return d >= 0 && base.shifted(d) == s;
}

MultiSupport RayFamily::member(const std::vector<Int>& steps) const {
  if (steps.size() != groups.size()) throw UsageError("family member: wrong number of steps");
  MultiSupport out = base;
  for (Int c : steps) {
    if (c < 0) throw UsageError("family member: negative step");
  }
  std::vector<Int> add(base.arity(), 0);
  for (std::size_t t = 0; t < groups.size(); ++t) {
    for (std::size_t j : groups[t]) add[j] = checked_add(add[j], steps[t]);
  }
  for (std::size_t j = 0; j < base.arity(); ++j) {
    if (add[j] == 0) continue;
    const Support& p = base.part(j);
    out.part(j) = p.without(p.max()).with(checked_add(p.max(), add[j]));
  }
  return out;
}

bool RayFamily::contains(const MultiSupport& s) const {
  if (s.arity() != base.arity()) return false;
  // Level of each unknown: number of groups containing it.
  std::vector<std::size_t> level(base.arity(), 0);
  for (const auto& g : groups) {
    for (std::size_t j : g) ++level[j];
  }
  std::vector<Int> diff_at_level(groups.size() + 1, -1);
  diff_at_level[0] = 0;
  for (std::size_t j = 0; j < base.arity(); ++j) {
    const Support& b = base.part(j);
    const Support& x = s.part(j);
    if (level[j] == 0) {
      if (b != x) return false;
      continue;
    }
    if (x.size() != b.size()) return false;
    if (b.without(b.max()) != x.without(x.max())) return false;
    const Int d = x.max() - b.max();
    if (d < 0) return false;
    Int& slot = diff_at_level[level[j]];
    if (slot == -1) {
      slot = d;
    } else if (slot != d) {
      return false;
    }
  }
  Int prev = 0;
  for (std::size_t t = 1; t < diff_at_level.size(); ++t) {
    if (diff_at_level[t] == -1) continue;
    if (diff_at_level[t] < prev) return false;
    prev = diff_at_level[t];
  }
  return true;
}

bool SolutionSet::contains(const MultiSupport& s) const {
  if (std::find(finite.begin(), finite.end(), s) != finite.end()) return true;
  for (const auto& r : rays) {
    if (r.contains(s)) return true;
  }
  for (const auto& f : families) {
    if (f.contains(s)) return true;
  }
  return false;
}

void SolutionSet::canonicalize() {
  sort_unique(finite);
  sort_unique(rays);
  sort_unique(families);
}

std::vector<MultiSupport> SolutionSet::expand(Int max_exponent) const {
  std::vector<MultiSupport> out;
  for (const auto& s : finite) {
    if (s.max_exponent() <= max_exponent) out.push_back(s);
  }
  for (const auto& r : rays) {
    for (Int i = 0; r.base.max_exponent() + i <= max_exponent; ++i) out.push_back(r.member(i));
  }
  for (const auto& f : families) {
    std::vector<Int> steps(f.groups.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
      if (t == steps.size()) {
        out.push_back(f.member(steps));
        return;
      }
      for (steps[t] = 0;; ++steps[t]) {
        if (f.member(steps).max_exponent() > max_exponent) break;
        rec(t + 1);
      }
      steps[t] = 0;
    };
    if (f.base.max_exponent() <= max_exponent) rec(0);
  }
  sort_unique(out);
  return out;
}

}  // namespace tropdiff
