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

#include "tropdiff/inversions.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "tropdiff/errors.hpp"

namespace tropdiff {

Perm identity_perm(std::size_t r) {
  Perm w(r);
  std::iota(w.begin(), w.end(), std::size_t{0});
  return w;
}

Perm reversal_perm(std::size_t r) {
  Perm w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = r - 1 - i;
  return w;
}

bool is_permutation(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (std::size_t x : w) {
    if (x >= w.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm inverse(const Perm& w) {
  Perm inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i]] = i;
  return inv;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw UsageError("compose: permutations of different size");
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

PermFamily::PermFamily(std::vector<Perm> ps) : perms(std::move(ps)) {
  if (perms.empty()) throw UsageError("permutation family is empty");
  r = perms.front().size();
  for (const auto& w : perms) {
    if (w.size() != r) throw UsageError("permutations in a family must share r");
    if (!is_permutation(w)) throw UsageError("not a permutation");
  }
}

PermFamily PermFamily::without(std::size_t j) const {
  if (j >= perms.size()) throw UsageError("family index out of range");
  PermFamily f;
  f.r = r;
  for (std::size_t x = 0; x < perms.size(); ++x) {
    if (x != j) f.perms.push_back(perms[x]);
  }
  return f;
}

std::size_t m_of(const Perm& w, std::span<const std::size_t> tuple) {
  if (tuple.empty()) throw UsageError("m_of: empty tuple");
  for (std::size_t x = 0; x < tuple.size(); ++x) {
    if (tuple[x] >= w.size()) throw UsageError("m_of: index " + std::to_string(tuple[x]) + " out of range");
    for (std::size_t y = 0; y < x; ++y) {
      if (tuple[x] == tuple[y]) throw UsageError("m_of: duplicate index");
    }
  }
  return *std::min_element(tuple.begin(), tuple.end(),
                           [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
}

bool is_inversion(const PermFamily& f, std::span<const std::size_t> tuple) {
  if (tuple.size() != f.n()) throw ArityError("is_inversion: tuple size must equal family size");
  std::vector<std::size_t> ms;
  for (const auto& w : f.perms) ms.push_back(m_of(w, tuple));
  std::sort(ms.begin(), ms.end());
  return std::adjacent_find(ms.begin(), ms.end()) == ms.end();
}

bool next_colex(std::vector<std::size_t>& c, std::size_t r) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = i + 1 < k ? c[i + 1] : r;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t x = 0; x < i; ++x) c[x] = x;
      return true;
    }
  }
  return false;
}

std::uint64_t count_inversions(const PermFamily& f) {
  const std::size_t n = f.n();
  if (n < 2) throw UsageError("count_inversions needs at least two permutations");
  if (n > f.r) return 0;
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), std::size_t{0});
  std::uint64_t count = 0;
  do {
    count += is_inversion(f, c) ? 1 : 0;
  } while (next_colex(c, f.r));
  return count;
}

std::uint64_t classical_inversions(const Perm& w) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j] ? 1 : 0;
  }
  return c;
}

std::vector<Perm> all_perms(std::size_t r) {
  if (r > 10) throw ResourceError("all_perms: r too large");
  std::vector<Perm> out;
  Perm w = identity_perm(r);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t max_inversions(std::size_t n, std::size_t r, const InversionSearchOptions& opts) {
  if (n < 2) throw UsageError("max_inversions needs n >= 2");
  if (r < 1) throw UsageError("max_inversions needs r >= 1");
  if (r > 10) throw ResourceError("max_inversions: r too large for exhaustive search");
  const auto perms = all_perms(r);
  const std::uint64_t p = perms.size();
  std::uint64_t families = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (families > opts.max_families / p) throw ResourceError("max_inversions: family budget exceeded");
    families *= p;
  }
  if (n > r) return 0;

  // Shards: the second permutation. Each worker enumerates the rest.
  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(p)));
  std::vector<std::uint64_t> best(jobs, 0);
  auto work = [&](unsigned id) {
    std::vector<std::size_t> idx(n, 0);  // idx[0] unused: identity
    PermFamily f;
    f.r = r;
    f.perms.assign(n, perms[0]);
    for (std::size_t s; (s = next.fetch_add(1)) < p;) {
      f.perms[1] = perms[s];
      std::fill(idx.begin() + 2, idx.end(), 0);
      for (std::size_t j = 2; j < n; ++j) f.perms[j] = perms[0];
      while (true) {
        best[id] = std::max(best[id], count_inversions(f));
        std::size_t j = 2;
        while (j < n && ++idx[j] == p) {
          idx[j] = 0;
          f.perms[j] = perms[0];
          ++j;
        }
        if (j >= n) break;
        f.perms[j] = perms[idx[j]];
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < jobs; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  return *std::max_element(best.begin(), best.end());
}

std::vector<std::size_t> cut_witness(const PermFamily& f, std::span<const std::size_t> subtuple) {
  if (f.n() < 3) throw UsageError("cut_witness needs n >= 3");
  if (subtuple.size() + 1 != f.n()) throw ArityError("cut_witness: subtuple must have n-1 entries");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < f.n(); ++j) {
    if (is_inversion(f.without(j), subtuple)) out.push_back(j);
  }
  return out;
}

}  // namespace tropdiff
