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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tropdiff/errors.hpp"
#include "tropdiff/inversions.hpp"

using namespace tropdiff;

namespace {

using Tuple = std::vector<std::size_t>;

std::uint64_t binom(std::uint64_t r, std::uint64_t n) {
  if (n > r) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= n; ++i) c = c * (r - n + i) / i;
  return c;
}

std::set<Tuple> inversion_set(const PermFamily& f) {
  std::set<Tuple> out;
  Tuple c(f.n());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
  do {
    if (is_inversion(f, c)) out.insert(c);
  } while (next_colex(c, f.r));
  return out;
}

}  // namespace

TEST_CASE("m_of examples") {
  const Tuple a{1, 4};
  CHECK(m_of(identity_perm(6), a) == 1);
  const Tuple b{0, 2};
  CHECK(m_of(reversal_perm(3), b) == 2);
  const Tuple dup{1, 1};
  CHECK_THROWS_AS(m_of(identity_perm(3), dup), UsageError);
  const Tuple out{0, 3};
  CHECK_THROWS_AS(m_of(identity_perm(3), out), UsageError);
  std::mt19937_64 rng(1);
  Perm w = identity_perm(7);
  for (int t = 0; t < 50; ++t) {
    std::shuffle(w.begin(), w.end(), rng);
    const Tuple tup{5, 2, 6};
    const auto m = m_of(w, tup);
    CHECK((m == 5 || m == 2 || m == 6));
  }
}

TEST_CASE("is_inversion examples") {
  const PermFamily er({identity_perm(3), reversal_perm(3)});
  const Tuple t{0, 2};
  CHECK(is_inversion(er, t));
  const PermFamily ee({identity_perm(4), identity_perm(4)});
  Tuple c{0, 1};
  do {
    CHECK_FALSE(is_inversion(ee, c));
  } while (next_colex(c, 4));
  const Tuple three{0, 1, 2};
  CHECK_THROWS_AS(is_inversion(er, three), ArityError);
}

TEST_CASE("colex order") {
  std::vector<Tuple> seen;
  Tuple c{0, 1};
  do {
    seen.push_back(c);
  } while (next_colex(c, 4));
  CHECK(seen == std::vector<Tuple>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("count examples") {
  for (std::size_t r = 2; r <= 7; ++r) {
    CHECK(count_inversions(PermFamily({identity_perm(r), reversal_perm(r)})) == r * (r - 1) / 2);
    CHECK(count_inversions(PermFamily({identity_perm(r), identity_perm(r)})) == 0);
  }
  // The only 3-subset {0,1,2}: minima sit at 0, 2 and 1.
  CHECK(count_inversions(PermFamily({identity_perm(3), {1, 2, 0}, {2, 0, 1}})) == 1);
}

TEST_CASE("n=2 reduces to classical inversions") {
  for (std::size_t r = 1; r <= 6; ++r) {
    for (const auto& w : all_perms(r)) {
      const PermFamily f({identity_perm(r), w});
      CHECK(count_inversions(f) == classical_inversions(w));
      Tuple c{0, 1};
      if (r < 2) continue;
      do {
        CHECK(is_inversion(f, c) == (w[c[0]] > w[c[1]]));
      } while (next_colex(c, r));
    }
  }
}

TEST_CASE("right composition relabels inversions") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 6, n = 2 + static_cast<std::size_t>(t % 3);
    std::vector<Perm> ps(n, identity_perm(r));
    for (auto& w : ps) std::shuffle(w.begin(), w.end(), rng);
    Perm tau = identity_perm(r);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<Perm> composed;
    for (const auto& w : ps) composed.push_back(compose(w, tau));
    const PermFamily f(ps), g(composed);
    const Perm tinv = inverse(tau);
    std::set<Tuple> mapped;
    for (auto tup : inversion_set(f)) {
      for (auto& x : tup) x = tinv[x];
      std::sort(tup.begin(), tup.end());
      mapped.insert(tup);
    }
    CHECK(mapped == inversion_set(g));
    CHECK(count_inversions(f) == count_inversions(g));
    CHECK(count_inversions(f) <= binom(r, n));
  }
}

TEST_CASE("max_inversions") {
  CHECK(max_inversions(2, 4) == 6);
  CHECK(max_inversions(2, 6) == 15);
  const auto m34 = max_inversions(3, 4);
  CHECK(m34 <= 4);
  CHECK(m34 >= 1);
  InversionSearchOptions par;
  par.jobs = 4;
  CHECK(max_inversions(3, 4, par) == m34);
  InversionSearchOptions tiny;
  tiny.max_families = 10;
  CHECK_THROWS_AS(max_inversions(3, 4, tiny), ResourceError);
  CHECK_THROWS_AS(max_inversions(1, 4), UsageError);
}

TEST_CASE("cut witnesses come in pairs") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 5, n = 3 + static_cast<std::size_t>(t % 2);
    std::vector<Perm> ps(n, identity_perm(r));
    for (auto& w : ps) std::shuffle(w.begin(), w.end(), rng);
    if (t % 5 == 0) ps[1] = ps[0];
    const PermFamily f(ps);
    Tuple c(n - 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    do {
      const auto w = cut_witness(f, c);
      CHECK((w.empty() || w.size() == 2));
      if (w.size() == 2) {
        // The two dropped permutations agree on the minimum of the subtuple.
        CHECK(m_of(f.perms[w[0]], c) == m_of(f.perms[w[1]], c));
      }
    } while (next_colex(c, r));
  }
  const PermFamily pair({identity_perm(3), reversal_perm(3)});
  const Tuple one{0};
  CHECK_THROWS_AS(cut_witness(pair, one), UsageError);
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(PermFamily({{0, 1}, {0, 0}}), UsageError);
  CHECK_THROWS_AS(PermFamily({{0, 1}, {0, 1, 2}}), UsageError);
  CHECK_THROWS_AS(PermFamily(std::vector<Perm>{}), UsageError);
}
