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

#include "tropdiff/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "tropdiff/core.hpp"
#include "tropdiff/errors.hpp"

namespace tropdiff {

SearchBox auto_box(const TldeSystem& sys) {
  Int kmax = 0;
  for (std::size_t j = 0; j < sys.unknowns(); ++j) kmax = std::max(kmax, sys.order(j));
  const Int q = checked_add(checked_add(2 * kmax, checked_sub(sys.max_coeff(), sys.min_coeff())), 1);
  SearchBox box;
  box.cap.assign(sys.unknowns(), q);
  box.total_size = 2 * sys.size();
  box.part_size.assign(sys.unknowns(), box.total_size);
  return box;
}

SearchBox widened(SearchBox box, Int min_cap) {
  for (auto& c : box.cap) c = std::max(c, min_cap);
  return box;
}

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / i;
  }
  return r;
}

void check_box(const TldeSystem& sys, const SearchBox& box) {
  if (box.cap.size() != sys.unknowns() || box.part_size.size() != sys.unknowns()) {
    throw ArityError("search box arity does not match the system");
  }
  for (Int c : box.cap) {
    if (c < 0) throw UsageError("search box caps must be nonnegative");
  }
}

// Calls fn on every nonzero tuple of the box with total size t, for t = 1, 2, ...
// fn returns false to stop early.
void for_each_candidate(const SearchBox& box, const std::function<bool(const MultiSupport&)>& fn) {
  const std::size_t n = box.cap.size();
  MultiSupport cur(n);
  std::vector<Int> buf;
  bool stop = false;
  std::vector<std::size_t> sizes(n, 0);

  std::function<void(std::size_t)> parts = [&](std::size_t j) {
    if (stop) return;
    if (j == n) {
      if (!fn(cur)) stop = true;
      return;
    }
    const std::size_t want = sizes[j];
    std::vector<Int> pick;
    std::function<void(Int)> comb = [&](Int from) {
      if (stop) return;
      if (pick.size() == want) {
        cur.part(j) = Support(pick);
        parts(j + 1);
        return;
      }
      const Int need = static_cast<Int>(want - pick.size());
      for (Int x = from; x + need - 1 <= box.cap[j]; ++x) {
        pick.push_back(x);
        comb(x + 1);
        pick.pop_back();
        if (stop) return;
      }
    };
    comb(0);
    cur.part(j) = Support();
  };

  std::function<void(std::size_t, std::size_t)> distribute = [&](std::size_t j, std::size_t left) {
    if (stop) return;
    if (j == n) {
      if (left == 0) parts(0);
      return;
    }
    const std::size_t hi = std::min(left, box.part_size[j]);
    for (std::size_t s = 0; s <= hi; ++s) {
      sizes[j] = s;
      distribute(j + 1, left - s);
    }
  };
  for (std::size_t t = 1; t <= box.total_size && !stop; ++t) distribute(0, t);
}

void check_budget(const SearchBox& box, const OracleLimits& limits) {
  if (candidate_count(box) > limits.max_candidates) {
    throw ResourceError("oracle box exceeds the enumeration budget");
  }
}

bool by_size_then_lex(const MultiSupport& a, const MultiSupport& b) {
  const auto sa = a.total_size();
  const auto sb = b.total_size();
  return sa != sb ? sa < sb : a < b;
}

}  // namespace

std::uint64_t candidate_count(const SearchBox& box) {
  // ways[t] = number of tuples over the processed unknowns with total size t.
  std::vector<std::uint64_t> ways(box.total_size + 1, 0);
  ways[0] = 1;
  for (std::size_t j = 0; j < box.cap.size(); ++j) {
    std::vector<std::uint64_t> next(box.total_size + 1, 0);
    const auto universe = static_cast<std::uint64_t>(box.cap[j] + 1);
    for (std::size_t t = 0; t <= box.total_size; ++t) {
      if (ways[t] == 0) continue;
      for (std::size_t s = 0; s <= box.part_size[j] && t + s <= box.total_size; ++s) {
        next[t + s] = sat_add(next[t + s], sat_mul(ways[t], binom(universe, s)));
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t t = 1; t <= box.total_size; ++t) total = sat_add(total, ways[t]);
  return total;
}

std::vector<MultiSupport> oracle_solutions(const TldeSystem& sys, const SearchBox& box,
                                           const OracleLimits& limits) {
  check_box(sys, box);
  check_budget(box, limits);
  std::vector<MultiSupport> out;
  for_each_candidate(box, [&](const MultiSupport& s) {
    if (is_solution(sys, s)) out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), by_size_then_lex);
  return out;
}

std::vector<MultiSupport> oracle_minimal(const TldeSystem& sys, const SearchBox& box,
                                         const OracleLimits& limits) {
  check_box(sys, box);
  check_budget(box, limits);
  std::vector<MultiSupport> found;
  std::size_t settled = 0;  // found[0, settled) have strictly smaller size
  std::size_t size = 0;
  for_each_candidate(box, [&](const MultiSupport& s) {
    if (s.total_size() != size) {
      size = s.total_size();
      settled = found.size();
    }
    for (std::size_t x = 0; x < settled; ++x) {
      if (found[x].is_subset_of(s)) return true;
    }
    if (is_solution(sys, s)) found.push_back(s);
    return true;
  });
  std::sort(found.begin(), found.end(), by_size_then_lex);
  return found;
}

std::vector<std::vector<Int>> oracle_infinity(const Tlde& p, Int depth) {
  if (p.unknowns() != 1) throw UsageError("solutions at infinity need one unknown");
  if (depth < 1 || depth > 20) throw UsageError("depth must lie in [1, 20]");
  const Int k = p.order(0);
  auto solves = [&](const std::vector<Int>& s) {
    // s sorted descending, all <= 0.
    std::optional<Int> below;  // largest element <= -1
    for (Int x : s) {
      if (x <= -1) {
        below = x;
        break;
      }
    }
    std::optional<Int> best;
    int count = 0;
    for (Int i = 0; i <= k; ++i) {
      std::optional<Int> v;
      if (i == 0) {
        v = s.front();
      } else if (below) {
        v = *below - i;
      }
      if (!v) continue;
      const Int t = checked_add(p.coeff(static_cast<std::size_t>(i), 0), *v);
      if (!best || t > *best) {
        best = t;
        count = 1;
      } else if (t == *best) {
        ++count;
      }
    }
    return count >= 2;
  };
  const auto universe = static_cast<unsigned>(depth + 1);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << universe); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : masks) {
    bool dominated = false;
    for (std::uint32_t f : minimal) {
      if ((f & m) == f) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::vector<Int> s;
    for (unsigned b = 0; b < universe; ++b) {
      if (m & (1u << b)) s.push_back(-static_cast<Int>(b));
    }
    if (solves(s)) minimal.push_back(m);
  }
  std::vector<std::vector<Int>> out;
  for (std::uint32_t m : minimal) {
    std::vector<Int> s;
    for (unsigned b = 0; b < universe; ++b) {
      if (m & (1u << b)) s.push_back(-static_cast<Int>(b));
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  return out;
}

}  // namespace tropdiff
