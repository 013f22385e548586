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

#include "tropdiff/support.hpp"

#include <algorithm>
#include <iterator>

namespace tropdiff {

Support::Support(std::initializer_list<Int> elems) : Support(std::vector<Int>(elems)) {}

Support::Support(std::vector<Int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 0) throw UsageError("support exponents must be nonnegative");
}

bool Support::contains(Int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

bool Support::is_subset_of(const Support& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

Support Support::united(const Support& other) const {
  std::vector<Int> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  Support s;
  s.elems_ = std::move(out);
  return s;
}

Support Support::shifted(Int by) const {
  std::vector<Int> out;
  out.reserve(elems_.size());
  for (Int x : elems_) out.push_back(checked_add(x, by));
  return Support(std::move(out));
}

Support Support::with(Int x) const { return united(Support{x}); }

Support Support::without(Int x) const {
  Support s = *this;
  s.elems_.erase(std::remove(s.elems_.begin(), s.elems_.end(), x), s.elems_.end());
  return s;
}

MultiSupport MultiSupport::monomial(std::size_t arity, std::size_t j, Int alpha) {
  if (j >= arity) throw ArityError("monomial index out of range");
  MultiSupport s(arity);
  s.parts_[j] = Support{alpha};
  return s;
}

bool MultiSupport::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Support& p) { return p.empty(); });
}

std::size_t MultiSupport::total_size() const {
  std::size_t n = 0;
  for (const auto& p : parts_) n += p.size();
  return n;
}

Int MultiSupport::max_exponent() const {
  Int m = -1;
  for (const auto& p : parts_) {
    if (!p.empty()) m = std::max(m, p.max());
  }
  return m;
}

bool MultiSupport::is_subset_of(const MultiSupport& other) const {
  if (arity() != other.arity()) throw ArityError("arity mismatch in subset test");
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (!parts_[j].is_subset_of(other.parts_[j])) return false;
  }
  return true;
}

MultiSupport MultiSupport::united(const MultiSupport& other) const {
  if (arity() != other.arity()) throw ArityError("arity mismatch in union");
  MultiSupport out(arity());
  for (std::size_t j = 0; j < parts_.size(); ++j) out.parts_[j] = parts_[j].united(other.parts_[j]);
  return out;
}

MultiSupport MultiSupport::shifted(Int by) const {
  MultiSupport out(arity());
  for (std::size_t j = 0; j < parts_.size(); ++j) out.parts_[j] = parts_[j].shifted(by);
  return out;
}

std::vector<MultiSupport> proper_nonzero_subsets(const MultiSupport& s) {
  std::vector<std::pair<std::size_t, Int>> flat;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    for (Int x : s.part(j).elems()) flat.emplace_back(j, x);
  }
  if (flat.size() >= 20) throw ResourceError("support too large for subset enumeration");
  const std::uint32_t full = (1u << flat.size()) - 1;
  std::vector<MultiSupport> out;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<std::vector<Int>> parts(s.arity());
    for (std::size_t b = 0; b < flat.size(); ++b) {
      if (mask & (1u << b)) parts[flat[b].first].push_back(flat[b].second);
    }
    std::vector<Support> sp;
    sp.reserve(parts.size());
    for (auto& p : parts) sp.emplace_back(std::move(p));
    out.emplace_back(std::move(sp));
  }
  return out;
}

}  // namespace tropdiff
