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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "tropdiff/core.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/generators.hpp"
#include "tropdiff/multi_unknown.hpp"
#include "tropdiff/oracle.hpp"
#include "tropdiff/single_eq.hpp"
#include "tropdiff/systems.hpp"

using namespace tropdiff;
using namespace tropdiff::testing;

namespace {

bool in_box(const MultiSupport& s, const SearchBox& box) {
  if (s.total_size() > box.total_size) return false;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    if (s.part(j).size() > box.part_size[j]) return false;
    if (!s.part(j).empty() && s.part(j).max() > box.cap[j]) return false;
  }
  return true;
}

// Solver output restricted to the oracle's box, and the oracle's answer.
std::pair<std::set<MultiSupport>, std::set<MultiSupport>> both(const TldeSystem& sys, const SolutionSet& sol,
                                                               const SearchBox& box) {
  std::set<MultiSupport> mine;
  const Int top = *std::max_element(box.cap.begin(), box.cap.end());
  for (const auto& m : sol.expand(top)) {
    if (in_box(m, box)) mine.insert(m);
  }
  const auto o = oracle_minimal(sys, box);
  return {mine, std::set<MultiSupport>(o.begin(), o.end())};
}

TldeSystem random_sys(std::mt19937_64& rng, std::size_t m, std::size_t n, Int kmax, Int lo, Int hi) {
  std::vector<Int> k(n);
  for (auto& x : k) x = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(kmax));
  std::vector<Tlde> eqs;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<std::vector<Int>> blocks(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (Int i = 0; i <= k[j]; ++i) {
        blocks[j].push_back(lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
      }
    }
    eqs.emplace_back(std::move(blocks));
  }
  return TldeSystem(std::move(eqs));
}

}  // namespace

TEST_CASE("genericity examples") {
  CHECK(is_generic(TldeSystem({eq1({3, 2, 1, 0})})));
  CHECK(is_generic(construct_n2(1, 1, 0, 2)));
  CHECK(is_generic(construct_n2(2, 2, 0, 2)));
  const auto p = eq2({5, 1}, {0, 3});
  CHECK_FALSE(is_generic(TldeSystem({p, p})));
  CHECK_THROWS_AS(is_generic(TldeSystem({p})), UsageError);
}

TEST_CASE("regularity examples") {
  CHECK(is_regular_system(TldeSystem({eq1({3, 2, 1, 0})})));
  CHECK_FALSE(is_regular_system(TldeSystem({eq2({0, 1}, {5, 0}), eq2({2, 0}, {5, 0})})));
  CHECK_FALSE(is_regular_system(TldeSystem({eq2({2, 0}, {2, 0}), eq2({2, 0}, {5, 0})})));
}

TEST_CASE("solve_system examples") {
  const auto one = solve_system(TldeSystem({eq2({2, 0}, {3, 1})}));
  CHECK_FALSE(one.holonomic());

  const auto c11 = construct_n2(1, 1, 0, 2);
  const auto s = solve_system(c11);
  CHECK(s.holonomic());
  CHECK(s.finite.size() == 3);

  const auto p = eq1({2, 0, 1});
  const auto alone = solve_system(TldeSystem({p}));
  const auto twice = solve_system(TldeSystem({p, p}));
  CHECK(alone == twice);
  CHECK(alone.finite == minimal_solutions_1(p).finite);
}

TEST_CASE("is_holonomic_system examples") {
  CHECK_FALSE(is_holonomic_system(TldeSystem({eq1({0, 1})})));
  CHECK(is_holonomic_system(TldeSystem({eq1({2, 0})})));
  CHECK_FALSE(is_holonomic_system(TldeSystem({eq2({2, 0}, {3, 1})})));
  CHECK_FALSE(is_holonomic_system(TldeSystem({eq2({1, 4, 0}, {0, 2})})));
}

TEST_CASE("single equations through the system solver match the closed forms") {
  for (const auto& a : all_vectors(3, -2, 2)) {
    const auto p = eq1(a);
    auto closed = minimal_solutions_1(p);
    auto sys = solve_system(TldeSystem({p}));
    closed.canonicalize();
    INFO(show(a));
    CHECK(sys.finite == closed.finite);
    CHECK(sys.rays == closed.rays);
    CHECK(sys.families.empty());
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    const auto sys = random_sys(rng, 1, 2, 2, -2, 2);
    auto closed = minimal_solutions_n(sys.equation(0));
    auto got = solve_system(sys);
    closed.canonicalize();
    CHECK(got.finite == closed.finite);
    CHECK(got.rays == closed.rays);
  }
}

TEST_CASE("branch constraints are well formed") {
  const auto sys = construct_n2(1, 1, 0, 2);
  LowChoice c{{Support{0}, Support{}}, {0, 1}};
  const auto bs = branches(sys, c);
  CHECK_FALSE(bs.empty());
  for (const auto& b : bs) {
    for (const auto& k : b) {
      CHECK(k.equation < 2);
      CHECK(k.witness_first != k.witness_second);
    }
  }
}

TEST_CASE("generic regular 2x2 systems match the oracle") {
  std::mt19937_64 rng(17);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const auto sys = random_sys(rng, 2, 2, 2, -6, 6);
    if (!is_generic(sys) || !is_regular_system(sys)) continue;
    ++tested;
    const auto sol = solve_system(sys);
    CHECK(sol.holonomic());
    const auto [mine, theirs] = both(sys, sol, auto_box(sys));
    CHECK(mine == theirs);
    CHECK(sol.finite.size() <= sharp_bound_n2(sys.order(0), sys.order(1)));
  }
  CHECK(tested >= 30);
}

TEST_CASE("arbitrary small systems match the oracle") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const auto sys = random_sys(rng, 2, 2, 1 + t % 2, -2, 2);
    const auto sol = solve_system(sys);
    const auto [mine, theirs] = both(sys, sol, auto_box(sys));
    INFO("trial " << t);
    CHECK(mine == theirs);
  }
}

TEST_CASE("pruned and unpruned searches agree on generic regular systems") {
  std::mt19937_64 rng(29);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 25; ++t) {
    const auto sys = random_sys(rng, 2, 2, 2, -6, 6);
    if (!is_generic(sys) || !is_regular_system(sys)) continue;
    ++tested;
    SolveOptions fast;
    fast.prune = true;
    CHECK(solve_system(sys) == solve_system(sys, fast));
  }
}

TEST_CASE("thread count does not change the result") {
  const auto sys = construct_n2(2, 3, 0, 2);
  SolveOptions one, four;
  four.jobs = 4;
  CHECK(solve_system(sys, one) == solve_system(sys, four));
}

TEST_CASE("node budget exhaustion is reported") {
  SolveOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(solve_system(construct_n2(2, 2, 0, 2), tiny), ResourceError);
}

TEST_CASE("solution types on the construction") {
  for (auto [ku, kv] : std::vector<std::pair<Int, Int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const auto sys = construct_n2(ku, kv, 0, 2);
    const auto sol = solve_system(sys);
    std::map<TypeN2, int> counts;
    for (const auto& s : sol.finite) {
      const auto t = classify_solution_n2(sys, s);
      ++counts[t.label];
      CHECK(t.rigidity_consistent);
      CHECK(classify_solution_n2(sys, s).attaining == t.attaining);
    }
    CHECK(counts[TypeN2::kUV] == ku * kv);
    CHECK(counts[TypeN2::kUU] == ku * (ku + 1) / 2);
    CHECK(counts[TypeN2::kVV] == kv * (kv + 1) / 2);
    CHECK(counts[TypeN2::kU] == 0);
    CHECK(counts[TypeN2::kV] == 0);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(classify_solution_n2(TldeSystem({eq1({0, 1})}), ms1({1})), UsageError);
  CHECK(to_string(TypeN2::kUV) == "uv");
}

TEST_CASE("a generic regular 3x3 system with a minimal solution missing an unknown") {
  const TldeSystem sys({Tlde({{5, -1, -5}, {9, 13, 20}, {31, 28, 25}}),
                        Tlde({{33, 27, 21}, {0, -5, -12}, {2, 7, 12}}),
                        Tlde({{12, 16, 24}, {32, 31, 29}, {6, -1, -2}})});
  REQUIRE(is_generic(sys));
  REQUIRE(is_regular_system(sys));
  const auto s = ms({{}, {17}, {1, 3}});
  CHECK(is_minimal_solution(sys, s));
  const auto exact = solve_system(sys);
  CHECK(std::find(exact.finite.begin(), exact.finite.end(), s) != exact.finite.end());
  CHECK(exact.finite.size() == 33);
  SolveOptions fast;
  fast.prune = true;
  const auto pruned = solve_system(sys, fast);
  CHECK(std::find(pruned.finite.begin(), pruned.finite.end(), s) == pruned.finite.end());
  for (const auto& f : exact.finite) CHECK(f.total_size() <= 6);
}

TEST_CASE("generic regular 2x2 minimal solutions carry one high exponent per unknown") {
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int t = 0; t < 600 && tested < 60; ++t) {
    const auto sys = random_sys(rng, 2, 2, 3, -8, 8);
    if (!is_generic(sys) || !is_regular_system(sys)) continue;
    ++tested;
    for (const auto& f : solve_system(sys).finite) {
      CHECK(f.total_size() <= 4);
      for (std::size_t j = 0; j < 2; ++j) {
        const auto& p = f.part(j);
        int high = 0;
        for (Int e : p.elems()) high += e >= sys.order(j) ? 1 : 0;
        CHECK(high == 1);
      }
    }
  }
}
