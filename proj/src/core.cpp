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

#include "tropdiff/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "tropdiff/errors.hpp"

namespace tropdiff {

bool vanishes(std::span<const ExtInt> terms) {
  if (terms.empty()) throw UsageError("vanishes: empty term list");
  ExtInt best = ExtInt::infinity();
  int count = 0;
  for (const auto& t : terms) {
    if (t < best) {
      best = t;
      count = 1;
    } else if (t == best) {
      ++count;
    }
  }
  return best.is_infinite() || count >= 2;
}

bool vanishes_weakly(std::span<const ExtInt> terms) {
  if (terms.empty()) throw UsageError("vanishes_weakly: empty term list");
  std::unordered_set<Int> seen;
  for (const auto& t : terms) {
    if (t.is_finite() && !seen.insert(t.value()).second) return true;
  }
  return false;
}

ExtInt val(const Support& s, Int i) {
  const auto e = s.elems();
  const auto it = std::lower_bound(e.begin(), e.end(), i);
  if (it == e.end()) return ExtInt::infinity();
  return checked_sub(*it, i);
}

namespace {

void check_arity(const Tlde& p, const MultiSupport& s) {
  if (p.unknowns() != s.arity()) {
    throw ArityError("support has " + std::to_string(s.arity()) + " parts, equation has " +
                     std::to_string(p.unknowns()) + " unknowns");
  }
}

}  // namespace

std::vector<ExtInt> term_values(const Tlde& p, const MultiSupport& s) {
  check_arity(p, s);
  std::vector<ExtInt> out;
  for (std::size_t j = 0; j < p.unknowns(); ++j) {
    const auto block = p.block(j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      out.push_back(ExtInt(block[i]) + val(s.part(j), static_cast<Int>(i)));
    }
  }
  return out;
}

ExtInt trop_eval(const Tlde& p, const MultiSupport& s) {
  const auto terms = term_values(p, s);
  return *std::min_element(terms.begin(), terms.end());
}

bool is_solution(const Tlde& p, const MultiSupport& s) { return vanishes(term_values(p, s)); }

bool is_solution(const TldeSystem& sys, const MultiSupport& s) {
  return std::all_of(sys.equations().begin(), sys.equations().end(),
                     [&](const Tlde& p) { return is_solution(p, s); });
}

bool is_minimal_solution(const TldeSystem& sys, const MultiSupport& s) {
  if (s.is_zero() || !is_solution(sys, s)) return false;
  for (const auto& t : proper_nonzero_subsets(s)) {
    if (is_solution(sys, t)) return false;
  }
  return true;
}

bool is_minimal_solution(const Tlde& p, const MultiSupport& s) {
  return is_minimal_solution(TldeSystem({p}), s);
}

MinCount a_value_min(const Tlde& p, std::size_t j, Int alpha) {
  if (j >= p.unknowns()) throw UsageError("a_value: unknown index out of range");
  if (alpha < 0) throw UsageError("a_value: negative exponent");
  const auto block = p.block(j);
  const Int top = std::min<Int>(alpha, p.order(j));
  MinCount mc{0, 0};
  for (Int i = 0; i <= top; ++i) {
    const Int v = checked_add(block[static_cast<std::size_t>(i)], checked_sub(alpha, i));
    if (mc.count == 0 || v < mc.value) {
      mc = {v, 1};
    } else if (v == mc.value) {
      ++mc.count;
    }
  }
  return mc;
}

Int a_value(const Tlde& p, std::size_t j, Int alpha) { return a_value_min(p, j, alpha).value; }

}  // namespace tropdiff
