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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tropdiff/errors.hpp"

namespace tropdiff {

using Int = std::int64_t;

// Overflow-checked integer helpers; throw OverflowError instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// An element of Z ∪ {∞}, the value domain of min-plus arithmetic.
///
/// ∞ is the neutral element of ⊕ (min) and absorbing for ⊙ (+). It compares
/// greater than every finite value, so std::min is the tropical sum.
class ExtInt {
 public:
  /// Default-constructed values are ∞, the tropical zero.
  constexpr ExtInt() = default;
  constexpr ExtInt(Int v) : finite_(true), value_(v) {}  // NOLINT: implicit

  static constexpr ExtInt infinity() { return ExtInt(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  // Throws UsageError on ∞.
  Int value() const;

  constexpr bool operator==(const ExtInt& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (!finite_ || !o.finite_) {
      return static_cast<int>(!finite_) <=> static_cast<int>(!o.finite_);
    }
    return value_ <=> o.value_;
  }

  // Tropical product: ordinary addition, ∞ absorbing, overflow-checked.
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtInt(checked_add(a.value_, b.value_));
  }

  std::string to_string() const;

 private:
  bool finite_ = false;
  Int value_ = 0;
};

inline ExtInt oplus(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt otimes(const ExtInt& a, const ExtInt& b) { return a + b; }

std::ostream& operator<<(std::ostream& os, const ExtInt& x);

}  // namespace tropdiff
