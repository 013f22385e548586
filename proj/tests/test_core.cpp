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

#include "helpers.hpp"
#include "tropdiff/core.hpp"
#include "tropdiff/difference_constraints.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/solution_set.hpp"

using namespace tropdiff;
using namespace tropdiff::testing;

namespace {
const ExtInt kInf = ExtInt::infinity();
bool van(std::vector<ExtInt> v) { return vanishes(v); }
bool weak(std::vector<ExtInt> v) { return vanishes_weakly(v); }
}  // namespace

TEST_CASE("ext_int arithmetic") {
  CHECK(ExtInt(3) + ExtInt(4) == ExtInt(7));
  CHECK((ExtInt(3) + kInf).is_infinite());
  CHECK(ExtInt(5) < kInf);
  CHECK(oplus(ExtInt(2), ExtInt(9)) == ExtInt(2));
  CHECK(otimes(ExtInt(2), ExtInt(9)) == ExtInt(11));
  CHECK(kInf.to_string() == "inf");
  CHECK_THROWS_AS(kInf.value(), UsageError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MIN, -1), OverflowError);
}

TEST_CASE("vanishing") {
  CHECK(van({1, 1, 2}));
  CHECK(van({kInf, kInf}));
  CHECK_FALSE(van({0, 1, 2}));
  CHECK(van({kInf}));
  CHECK_THROWS_AS(van({}), UsageError);

  CHECK(weak({1, 1, kInf}));
  CHECK_FALSE(weak({kInf, kInf}));
  CHECK_FALSE(weak({0, 1}));
  CHECK(weak({5, 0, 5}));
  CHECK_THROWS_AS(weak({}), UsageError);
}

TEST_CASE("support algebra") {
  Support s{3, 1, 3};
  CHECK(s.size() == 2);
  CHECK(s.min() == 1);
  CHECK(s.max() == 3);
  CHECK(Support{1}.is_subset_of(s));
  CHECK(s.shifted(2) == Support{3, 5});
  CHECK_THROWS_AS(Support({-1}), UsageError);

  auto m = ms({{0, 2}, {1}});
  CHECK(m.total_size() == 3);
  CHECK(m.max_exponent() == 2);
  CHECK(ms({{}, {}}).max_exponent() == -1);
  CHECK(ms({{0}, {}}).is_proper_subset_of(m));
  CHECK(proper_nonzero_subsets(m).size() == 6);
  CHECK(m.shifted(1) == ms({{1, 3}, {2}}));
}

TEST_CASE("val") {
  CHECK(val(Support{3}, 1) == ExtInt(2));
  CHECK(val(Support{}, 0).is_infinite());
  CHECK(val(Support{0, 5}, 2) == ExtInt(3));
  CHECK(val(Support{0, 5}, 6).is_infinite());
  CHECK(val(Support{4}, 4) == ExtInt(0));
}

TEST_CASE("trop_eval and is_solution") {
  CHECK(trop_eval(eq1({0, 1}), ms1({1})) == ExtInt(1));
  CHECK(trop_eval(eq1({2, 0}), ms1({0, 3})) == ExtInt(2));
  CHECK(trop_eval(eq2({0, 1}, {4, 4}), ms({{}, {}})).is_infinite());

  for (Int q = 1; q <= 8; ++q) CHECK(is_solution(eq1({0, 1}), ms1({q})));
  CHECK_FALSE(is_solution(eq1({0, 0}), ms1({1})));
  CHECK(is_solution(eq1({2, 0}), ms1({0, 3})));
  CHECK_THROWS_AS(is_solution(eq1({2, 0}), ms({{0}, {1}})), ArityError);
}

TEST_CASE("minimality") {
  const auto p = eq1({2, 0});
  CHECK(is_minimal_solution(p, ms1({0, 3})));
  CHECK_FALSE(is_minimal_solution(p, ms1({0, 3, 7})));
  CHECK_FALSE(is_minimal_solution(p, ms1({})));
  CHECK(is_minimal_solution(eq1({0, 1}), ms1({4})));
}

TEST_CASE("A values") {
  CHECK(a_value(eq1({0, 2, 4}), 0, 3) == 3);
  CHECK(a_value(eq1({3, 2, 1, 0}), 0, 2) == 1);
  for (Int a0 : {-4, 0, 7}) CHECK(a_value(eq1({a0, 1, 2}), 0, 0) == a0);
  const auto m = a_value_min(eq1({0, 1}), 0, 1);
  CHECK(m.value == 1);
  CHECK(m.count == 2);
  CHECK(a_value_min(eq1({2, 0}), 0, 1).count == 1);
}

TEST_CASE("difference constraints") {
  DifferenceSystem d(2);
  d.add_lower(1, 3);
  d.add_diff_eq(2, 1, 4);
  d.add_upper(2, 10);
  REQUIRE(d.solve());
  CHECK(d.upper(1) == ExtInt(6));
  CHECK(d.lower(2) == 7);
  CHECK(d.max_diff(2, 1) == ExtInt(4));

  DifferenceSystem bad(1);
  bad.add_lower(1, 5);
  bad.add_upper(1, 4);
  CHECK_FALSE(bad.solve());
}

TEST_CASE("shift rays and ray families") {
  ShiftRay r{ms1({2})};
  CHECK(r.contains(ms1({5})));
  CHECK_FALSE(r.contains(ms1({1})));
  CHECK(r.member(3) == ms1({5}));

  RayFamily f{ms({{0, 4}, {5}}), {{0, 1}, {1}}};
  CHECK(f.member({1, 2}) == ms({{0, 5}, {8}}));
  CHECK(f.contains(ms({{0, 5}, {8}})));
  CHECK(f.contains(f.base));
  // The outer group shifts both parts; the inner one only v.
  CHECK_FALSE(f.contains(ms({{0, 6}, {5}})));
  // No downward moves.
  CHECK_FALSE(f.contains(ms({{0, 3}, {4}})));
  CHECK_FALSE(RayFamily{ms1({2}), {{0}}}.contains(ms1({1})));

  SolutionSet s;
  s.finite = {ms1({1}), ms1({0, 3}), ms1({1})};
  s.rays = {r};
  s.canonicalize();
  CHECK(s.finite.size() == 2);
  CHECK(s.contains(ms1({9})));
  CHECK(s.expand(4) == std::vector<MultiSupport>{ms1({0, 3}), ms1({1}), ms1({2}), ms1({3}), ms1({4})});
}
