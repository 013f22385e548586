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

// Small builders shared by the test binaries.

#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "tropdiff/support.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff::testing {

inline std::string show(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}


inline Tlde eq1(std::vector<Int> a) { return Tlde({std::move(a)}); }

inline Tlde eq2(std::vector<Int> u, std::vector<Int> v) { return Tlde({std::move(u), std::move(v)}); }

inline MultiSupport ms(std::initializer_list<std::initializer_list<Int>> parts) {
  std::vector<Support> out;
  for (auto p : parts) out.emplace_back(std::vector<Int>(p));
  return MultiSupport(std::move(out));
}

inline MultiSupport ms1(std::initializer_list<Int> s) { return ms({s}); }

// Every coefficient vector of length len with entries in [lo, hi].
inline std::vector<std::vector<Int>> all_vectors(std::size_t len, Int lo, Int hi) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(len, lo);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < len && ++cur[i] > hi) cur[i++] = lo;
    if (i == len) break;
  }
  return out;
}

}  // namespace tropdiff::testing
