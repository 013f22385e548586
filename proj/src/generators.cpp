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

#include "tropdiff/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "tropdiff/errors.hpp"
#include "tropdiff/systems.hpp"

namespace tropdiff {

std::int64_t portable_draw(std::uint64_t raw, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw UsageError("empty draw range");
  // Unsigned arithmetic so the full int64 range wraps instead of overflowing.
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + (span == 0 ? raw : raw % span));
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Int draw(Int lo, Int hi) { return portable_draw(eng_(), lo, hi); }

 private:
  std::mt19937_64 eng_;
};

// a_0 = start, then each step adds a draw from [lo_inc, hi_inc].
std::vector<Int> walk(Rng& rng, Int start, Int len, Int lo_inc, Int hi_inc) {
  std::vector<Int> v{start};
  for (Int i = 0; i < len; ++i) v.push_back(checked_add(v.back(), rng.draw(lo_inc, hi_inc)));
  return v;
}

bool rises_by(const std::vector<Int>& v, Int d) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] < v[i] + d) return false;
  }
  return true;
}

bool falls_by(const std::vector<Int>& v, Int d) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i] - d) return false;
  }
  return true;
}

}  // namespace

TldeSystem construct_n2(Int k_u, Int k_v, Int base, Int step, const GeneratorOptions& opts) {
  if (k_u < 1 || k_v < 1) throw UsageError("orders must be at least 1");
  if (step < 2) throw UsageError("step must be at least 2");
  Rng rng(opts.seed);
  const Int j = 3 * step;  // jitter width
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    const Int a0u1 = base + rng.draw(0, j);
    const Int a0v1 = a0u1 - rng.draw(1, j);
    const Int a0v2 = base + rng.draw(0, j);
    const Int a0u2 = a0v2 - rng.draw(1, j);
    auto u1 = walk(rng, a0u1, k_u, step, step + j);
    auto v1 = walk(rng, a0v1, k_v, -(step + j), -1);
    auto u2 = walk(rng, a0u2, k_u, -(step + j), -1);
    auto v2 = walk(rng, a0v2, k_v, step, step + j);
    if (!(rises_by(u1, 1) && falls_by(v1, 1) && falls_by(u2, 1) && rises_by(v2, 1) && v1[0] < u1[0] &&
          u2[0] < v2[0])) {
      throw std::logic_error("construct_n2 produced coefficients violating its inequalities");
    }
    TldeSystem sys({Tlde({u1, v1}), Tlde({u2, v2})});
    if (is_generic(sys) && is_regular_system(sys)) return sys;
  }
  throw ResourceError("construct_n2: retry budget exhausted; try a larger step");
}

void LowerBoundPlan::validate() const {
  if (n < 2) throw UsageError("lower-bound plan needs n >= 2");
  if (orders.size() != n) throw UsageError("lower-bound plan: orders must have n entries");
  for (Int k : orders) {
    if (k < 1) throw UsageError("lower-bound plan: orders must be at least 1");
  }
  for (std::size_t x = 0; x < family.size(); ++x) {
    if (family[x] >= n) throw UsageError("lower-bound plan: family index out of range");
    if (x > 0 && family[x] < family[x - 1] + 2) {
      throw UsageError("lower-bound plan: family indices need gaps of at least 2");
    }
  }
  if (family.size() >= 2 && family.front() + n < family.back() + 2) {
    throw UsageError("lower-bound plan: family indices need a cyclic gap of at least 2");
  }
}

TldeSystem construct_lower(const LowerBoundPlan& plan, Int base, Int step, const GeneratorOptions& opts) {
  plan.validate();
  if (step < 2) throw UsageError("step must be at least 2");
  const std::size_t n = plan.n;
  const auto& k = plan.orders;
  Rng rng(opts.seed);
  const Int j = 3 * step;
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    std::vector<Tlde> eqs;
    bool ok = true;
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t s = (l + 1) % n;
      std::vector<std::vector<Int>> blocks(n);
      const Int own0 = base + rng.draw(0, j);
      blocks[l] = walk(rng, own0, k[l], -(step + j), -1);
      blocks[s] = walk(rng, own0 + rng.draw(1, j), k[s], step, step + j);
      const Int top = blocks[s].back();
      for (std::size_t r = 0; r < n; ++r) {
        if (r == l || r == s) continue;
        // Build backwards from just above the threshold so the block decreases.
        auto up = walk(rng, top + k[r] + 1 + rng.draw(0, j), k[r], 1, step + j);
        std::reverse(up.begin(), up.end());
        blocks[r] = std::move(up);
      }
      ok = ok && falls_by(blocks[l], 1) && rises_by(blocks[s], 1) && blocks[l][0] < blocks[s][0];
      for (std::size_t r = 0; r < n; ++r) {
        if (r == l || r == s) continue;
        for (Int a : blocks[r]) ok = ok && a > top + k[r];
      }
      eqs.emplace_back(std::move(blocks));
    }
    if (!ok) throw std::logic_error("construct_lower produced coefficients violating its inequalities");
    TldeSystem sys(std::move(eqs));
    if (is_generic(sys) && is_regular_system(sys)) return sys;
  }
  throw ResourceError("construct_lower: retry budget exhausted; try a larger step");
}

std::uint64_t expected_lower_count(const LowerBoundPlan& plan) {
  plan.validate();
  const std::size_t n = plan.n;
  std::vector<bool> special(n, false);
  std::uint64_t count = 1;
  for (std::size_t p : plan.family) {
    const auto kp = static_cast<std::uint64_t>(plan.orders[p]);
    count *= kp * (kp + 1) / 2;
    special[p] = true;
    special[(p + n - 1) % n] = true;
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!special[r]) count *= static_cast<std::uint64_t>(plan.orders[r]);
  }
  return count;
}

std::vector<std::vector<Support>> promised_low_parts(const LowerBoundPlan& plan) {
  plan.validate();
  const std::size_t n = plan.n;
  // Choices per unknown.
  std::vector<std::vector<Support>> per(n);
  std::vector<int> role(n, 0);  // 0 plain, 1 family member, 2 predecessor
  for (std::size_t p : plan.family) {
    role[p] = 1;
    role[(p + n - 1) % n] = 2;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Int k = plan.orders[r];
    if (role[r] == 1) {
      for (Int a = 0; a < k; ++a) {
        for (Int b = a; b < k; ++b) per[r].push_back(Support{a, b});
      }
    } else if (role[r] == 2) {
      per[r].push_back(Support());
    } else {
      for (Int a = 0; a < k; ++a) per[r].push_back(Support{a});
    }
  }
  std::vector<std::vector<Support>> out;
  std::vector<Support> cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : per[r]) {
      cur[r] = s;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

TldeSystem random_system(std::size_t n, const std::vector<Int>& orders, Int lo, Int hi,
                         const GeneratorOptions& opts) {
  if (n < 1 || orders.size() != n) throw UsageError("random_system: orders must have n entries");
  if (hi < lo) throw UsageError("random_system: empty coefficient range");
  Rng rng(opts.seed);
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    std::vector<Tlde> eqs;
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<std::vector<Int>> blocks(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (Int i = 0; i <= orders[j]; ++i) blocks[j].push_back(rng.draw(lo, hi));
      }
      eqs.emplace_back(std::move(blocks));
    }
    TldeSystem sys(std::move(eqs));
    if (is_generic(sys) && is_regular_system(sys)) return sys;
  }
  throw ResourceError("random_system: rejection budget exhausted; widen the coefficient range");
}

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > ~std::uint64_t{0} / num) throw OverflowError("binomial coefficient overflow");
    r = r * num / i;
  }
  return r;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) throw OverflowError("bound overflow");
  return a * b;
}

}  // namespace

std::uint64_t naive_upper_bound(const std::vector<Int>& orders) {
  const std::size_t n = orders.size();
  for (Int k : orders) {
    if (k < 1) throw UsageError("orders must be at least 1");
  }
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::size_t left,
                                                                        std::uint64_t prod) {
    if (j == n) {
      total += prod;
      return;
    }
    for (std::size_t d = 0; d <= left; ++d) {
      const auto k = static_cast<std::uint64_t>(orders[j]);
      rec(j + 1, left - d, mul_checked(prod, choose(k + d - 1, d)));
    }
  };
  rec(0, n, 1);
  return total;
}

std::uint64_t sharp_bound_n2(Int k_u, Int k_v) {
  if (k_u < 1 || k_v < 1) throw UsageError("orders must be at least 1");
  const auto s = static_cast<std::uint64_t>(k_u + k_v);
  return s * (s + 1) / 2;
}

LeadingTerm leading_upper(std::size_t n, const std::vector<Int>& orders) {
  if (n < 1 || orders.size() != n) throw UsageError("leading_upper: orders must have n entries");
  std::uint64_t sum = 0;
  for (Int k : orders) {
    if (k < 1) throw UsageError("orders must be at least 1");
    sum += static_cast<std::uint64_t>(k);
  }
  std::uint64_t num = 2;
  for (std::size_t i = 0; i < n; ++i) num = mul_checked(num, sum);
  std::uint64_t den = n;
  for (std::size_t i = 2; i <= n; ++i) den = mul_checked(den, i);
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g, true};
}

}  // namespace tropdiff
