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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropdiff/ext_int.hpp"

namespace tropdiff {

/// A finite set of nonnegative exponents, stored strictly increasing.
class Support {
 public:
  Support() = default;
  Support(std::initializer_list<Int> elems);
  // Sorts and deduplicates; negative entries throw UsageError.
  explicit Support(std::vector<Int> elems);

  std::span<const Int> elems() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(Int x) const;
  // Precondition: non-empty.
  Int min() const { return elems_.front(); }
  Int max() const { return elems_.back(); }

  bool is_subset_of(const Support& other) const;
  Support united(const Support& other) const;
  Support shifted(Int by) const;
  Support with(Int x) const;
  Support without(Int x) const;

  auto operator<=>(const Support&) const = default;
  bool operator==(const Support&) const = default;

 private:
  std::vector<Int> elems_;
};

/// An n-tuple of supports, ordered componentwise by inclusion. The zero
/// element is the tuple of empty supports.
class MultiSupport {
 public:
  MultiSupport() = default;
  explicit MultiSupport(std::size_t arity) : parts_(arity) {}
  explicit MultiSupport(std::vector<Support> parts) : parts_(std::move(parts)) {}

  // t_j^alpha
  static MultiSupport monomial(std::size_t arity, std::size_t j, Int alpha);

  std::size_t arity() const { return parts_.size(); }
  const Support& part(std::size_t j) const { return parts_.at(j); }
  Support& part(std::size_t j) { return parts_.at(j); }
  const std::vector<Support>& parts() const { return parts_; }

  bool is_zero() const;
  std::size_t total_size() const;
  // Largest exponent over all parts; -1 for the zero tuple.
  Int max_exponent() const;

  bool is_subset_of(const MultiSupport& other) const;
  bool is_proper_subset_of(const MultiSupport& other) const {
    return *this != other && is_subset_of(other);
  }
  MultiSupport united(const MultiSupport& other) const;
  // Adds `by` to every exponent of every part (the shift action t^by · S).
  MultiSupport shifted(Int by) const;

  auto operator<=>(const MultiSupport&) const = default;
  bool operator==(const MultiSupport&) const = default;

 private:
  std::vector<Support> parts_;
};

// All proper, non-empty sub-tuples of `s`. Exponential in total_size().
std::vector<MultiSupport> proper_nonzero_subsets(const MultiSupport& s);

}  // namespace tropdiff
