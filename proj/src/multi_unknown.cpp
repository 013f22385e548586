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

#include "tropdiff/multi_unknown.hpp"

#include <algorithm>
#include <set>

#include "tropdiff/core.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/single_eq.hpp"

namespace tropdiff {

namespace {

void require_multi(const Tlde& p) {
  if (p.unknowns() < 2) throw UsageError("expected an equation in at least two unknowns");
}

Int top_value(const Tlde& p, std::size_t j) { return a_value(p, j, p.order(j)); }

MultiSupport two_terms(std::size_t n, std::size_t i, Int p, std::size_t j, Int q) {
  MultiSupport s(n);
  s.part(i) = s.part(i).with(p);
  s.part(j) = s.part(j).with(q);
  return s;
}

}  // namespace

std::vector<std::size_t> loops(const Tlde& p) {
  require_multi(p);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.unknowns(); ++j) {
    if (a_value_min(p, j, p.order(j)).count >= 2) out.push_back(j);
  }
  return out;
}

CircuitMatroid circuit_matroid(const Tlde& p) {
  CircuitMatroid m;
  m.ground = p.unknowns();
  m.loops = loops(p);
  std::vector<bool> is_loop(m.ground, false);
  for (std::size_t j : m.loops) {
    is_loop[j] = true;
    m.circuits.push_back({{j}, p.order(j)});
  }
  for (std::size_t a = 0; a < m.ground; ++a) {
    for (std::size_t b = a + 1; b < m.ground; ++b) {
      if (is_loop[a] || is_loop[b]) continue;
      const Int d = checked_sub(top_value(p, a), top_value(p, b));
      m.circuits.push_back({{a, b}, d < 0 ? -d : d});
    }
  }
  return m;
}

std::vector<ShiftRay> ray_solutions(const Tlde& p) {
  const std::size_t n = p.unknowns();
  const auto lp = loops(p);
  std::vector<bool> is_loop(n, false);
  std::vector<ShiftRay> out;
  for (std::size_t j : lp) {
    is_loop[j] = true;
    out.push_back({MultiSupport::monomial(n, j, p.order(j))});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (is_loop[a] || is_loop[b]) continue;
      const Int aa = top_value(p, a);
      const Int ab = top_value(p, b);
      if (ab <= aa) {
        out.push_back({two_terms(n, a, p.order(a), b, p.order(b) + (aa - ab))});
      } else {
        out.push_back({two_terms(n, a, p.order(a) + (ab - aa), b, p.order(b))});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolutionSet minimal_solutions_n(const Tlde& p) {
  require_multi(p);
  const std::size_t n = p.unknowns();
  SolutionSet out;
  out.rays = ray_solutions(p);

  std::vector<bool> is_loop(n, false);
  for (std::size_t j : loops(p)) is_loop[j] = true;

  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& s : minimal_solutions_1(p.block_equation(j)).finite) {
      MultiSupport e(n);
      e.part(j) = s.part(0);
      out.finite.push_back(std::move(e));
    }
  }

  // A monomial t_j^alpha is a solution iff A_{alpha,j} is attained twice.
  auto low_ok = [&](std::size_t j, Int alpha) { return a_value_min(p, j, alpha).count == 1; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Int a = 0; a < p.order(i); ++a) {
        if (!low_ok(i, a)) continue;
        const Int va = a_value(p, i, a);
        if (i < j) {
          for (Int b = 0; b < p.order(j); ++b) {
            if (low_ok(j, b) && a_value(p, j, b) == va) out.finite.push_back(two_terms(n, i, a, j, b));
          }
        }
        if (is_loop[j]) continue;
        // Mixed pair: A_{q,j} = A_{k_j,j} + q - k_j must equal A_{a,i}.
        const Int q = checked_add(checked_sub(va, top_value(p, j)), p.order(j));
        if (q >= p.order(j)) out.finite.push_back(two_terms(n, i, a, j, q));
      }
    }
  }

  out.canonicalize();
  std::vector<MultiSupport> kept;
  for (const auto& s : out.finite) {
    bool dominated = false;
    for (const auto& t : out.finite) {
      if (t.is_proper_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    for (const auto& r : out.rays) {
      if (dominated) break;
      for (Int d = 0; r.base.max_exponent() + d <= s.max_exponent(); ++d) {
        if (r.member(d).is_subset_of(s)) {
          dominated = true;
          break;
        }
      }
    }
    if (!dominated) kept.push_back(s);
  }
  out.finite = std::move(kept);
  return out;
}

bool is_regular_n(const Tlde& p) {
  require_multi(p);
  std::set<Int> seen;
  for (std::size_t j = 0; j < p.unknowns(); ++j) {
    if (!is_regular_1(p.block_equation(j))) return false;
    for (Int alpha = 0; alpha < p.order(j); ++alpha) {
      if (!seen.insert(a_value(p, j, alpha)).second) return false;
    }
  }
  return true;
}

}  // namespace tropdiff
