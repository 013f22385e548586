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
#include <set>

#include "helpers.hpp"
#include "tropdiff/core.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/oracle.hpp"
#include "tropdiff/single_eq.hpp"

using namespace tropdiff;
using namespace tropdiff::testing;

namespace {

std::vector<MultiSupport> oracle_for(const Tlde& p, Int cap) {
  TldeSystem sys({p});
  return oracle_minimal(sys, widened(auto_box(sys), cap));
}

std::vector<std::vector<Int>> expected_infinity(const InfinitySolutions& inf, Int depth) {
  std::vector<std::vector<Int>> out;
  if (inf.negative_ray) {
    for (Int r = 1; r <= depth; ++r) out.push_back({-r});
  }
  if (inf.pair_r && *inf.pair_r <= depth) out.push_back({-*inf.pair_r, 0});
  return out;
}

}  // namespace

TEST_CASE("holonomicity and existence examples") {
  CHECK_FALSE(is_holonomic(eq1({0, 1})));
  CHECK(is_holonomic(eq1({2, 0})));
  CHECK(is_holonomic(eq1({0, 0, 0})));
  CHECK_FALSE(has_nonzero_solution(eq1({0, 2, 3})));
  CHECK(has_nonzero_solution(eq1({2, 0})));
  CHECK(has_nonzero_solution(eq1({0, 1})));
  CHECK_THROWS_AS(is_holonomic(eq2({0, 1}, {1, 0})), UsageError);
}

TEST_CASE("q_of_p examples") {
  CHECK(q_of_p(eq1({2, 0}), 0) == 3);
  CHECK(q_of_p(eq1({3, 2, 1, 0}), 1) == 5);
  CHECK_FALSE(q_of_p(eq1({0, 2, 3}), 0).has_value());
}

TEST_CASE("minimal solutions examples") {
  auto s = minimal_solutions_1(eq1({2, 0}));
  CHECK(s.finite == std::vector<MultiSupport>{ms1({0, 3})});
  CHECK(s.rays.empty());

  s = minimal_solutions_1(eq1({0, 1}));
  CHECK(s.finite.empty());
  REQUIRE(s.rays.size() == 1);
  CHECK(s.rays[0].base == ms1({1}));

  s = minimal_solutions_1(eq1({0, 0, 0}));
  CHECK(s.finite == std::vector<MultiSupport>{ms1({0, 1}), ms1({0, 2}), ms1({1, 2})});
  CHECK(s.rays.empty());
}

TEST_CASE("regularity examples") {
  CHECK(is_regular_1(eq1({3, 2, 1, 0})));
  CHECK_FALSE(is_regular_1(eq1({0, 0, 0})));
  CHECK_FALSE(is_regular_1(eq1({0, 1})));
}

TEST_CASE("configuration examples") {
  auto c = configuration(eq1({3, 2, 1, 0}));
  CHECK(c.entries == std::vector<ConfigEntry>{StarEntry{0, 6}, StarEntry{1, 5}, StarEntry{2, 4}});
  c = configuration(eq1({2, 0}));
  CHECK(c.entries == std::vector<ConfigEntry>{StarEntry{0, 3}});
  c = configuration(eq1({0, 0, 0}));
  CHECK(c.entries == std::vector<ConfigEntry>{ConcretePair{0, 1}, StarEntry{0, 2}, StarEntry{1, 2}});
  CHECK_THROWS_AS(configuration(eq1({0, 1})), UsageError);
}

TEST_CASE("infinity examples") {
  auto inf = infinity_solutions(eq1({0, 2, 3}));
  CHECK(inf.negative_ray);
  CHECK_FALSE(inf.pair_r);
  inf = infinity_solutions(eq1({2, 0}));
  CHECK(inf.empty());
  inf = infinity_solutions(eq1({0, 2}));
  CHECK_FALSE(inf.negative_ray);
  CHECK(inf.pair_r == 1);

  CHECK(oracle_infinity(eq1({0, 2, 3}), 4) == std::vector<std::vector<Int>>{{-1}, {-2}, {-3}, {-4}});
  CHECK(oracle_infinity(eq1({0, 2}), 3) == std::vector<std::vector<Int>>{{-1, 0}});
  CHECK(oracle_infinity(eq1({2, 0}), 5).empty());
}

TEST_CASE("closed form matches the oracle for all small equations") {
  for (Int k = 1; k <= 3; ++k) {
    for (const auto& a : all_vectors(static_cast<std::size_t>(k) + 1, -2, 2)) {
      const auto p = eq1(a);
      const Int cap = 2 * k + 4 + 1 + 2;
      const auto sol = minimal_solutions_1(p);
      const auto got = sol.expand(cap);
      auto want = oracle_for(p, cap);
      std::sort(want.begin(), want.end());
      INFO(show(a));
      REQUIRE(got == want);
      CHECK(sol.holonomic() == is_holonomic(p));
      CHECK(has_nonzero_solution(p) == !want.empty());
      CHECK(expected_infinity(infinity_solutions(p), 5) == oracle_infinity(p, 5));
    }
  }
}

TEST_CASE("regular iff no rays and every element pairs a low and a high exponent") {
  for (Int k = 1; k <= 3; ++k) {
    for (const auto& a : all_vectors(static_cast<std::size_t>(k) + 1, -2, 2)) {
      const auto p = eq1(a);
      const auto sol = minimal_solutions_1(p);
      bool shapes = sol.rays.empty();
      for (const auto& f : sol.finite) {
        const auto& e = f.part(0).elems();
        shapes = shapes && e.size() == 2 && e[0] < k && e[1] >= k;
      }
      INFO(show(a));
      CHECK(is_regular_1(p) == shapes);
      if (is_regular_1(p)) CHECK(sol.finite.size() <= static_cast<std::size_t>(k));
    }
  }
}

TEST_CASE("configuration is consistent with the solution set") {
  for (const auto& a : all_vectors(4, -2, 2)) {
    const auto p = eq1(a);
    if (!is_holonomic(p)) continue;
    const auto sol = minimal_solutions_1(p);
    std::set<MultiSupport> from_config;
    for (const auto& e : configuration(p).entries) {
      if (auto* c = std::get_if<ConcretePair>(&e)) from_config.insert(ms1({c->p, c->q}));
      if (auto* s = std::get_if<StarEntry>(&e)) from_config.insert(ms1({s->p, s->q}));
      if (auto* s = std::get_if<Singleton>(&e)) from_config.insert(ms1({s->j}));
    }
    INFO(show(a));
    CHECK(from_config == std::set<MultiSupport>(sol.finite.begin(), sol.finite.end()));
  }
}

TEST_CASE("shift invariance of rays") {
  const auto p = eq1({0, 1});
  const auto sol = minimal_solutions_1(p);
  for (Int i = 0; i < 10; ++i) CHECK(is_minimal_solution(p, sol.rays[0].member(i)));
}
