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

#include "tropdiff/tlde.hpp"

#include <algorithm>
#include <string>

#include "tropdiff/errors.hpp"

namespace tropdiff {

Tlde::Tlde(std::vector<std::vector<Int>> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("an equation needs at least one unknown");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].size() < 2) {
      throw UsageError("block " + std::to_string(j) + " needs order >= 1 (at least two coefficients)");
    }
  }
}

std::vector<Int> Tlde::orders() const {
  std::vector<Int> k;
  k.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) k.push_back(order(j));
  return k;
}

Tlde Tlde::block_equation(std::size_t j) const { return Tlde({coeffs_.at(j)}); }

Int Tlde::min_coeff() const {
  Int m = coeffs_[0][0];
  for (const auto& b : coeffs_) m = std::min(m, *std::min_element(b.begin(), b.end()));
  return m;
}

Int Tlde::max_coeff() const {
  Int m = coeffs_[0][0];
  for (const auto& b : coeffs_) m = std::max(m, *std::max_element(b.begin(), b.end()));
  return m;
}

TldeSystem::TldeSystem(std::vector<Tlde> eqs) : eqs_(std::move(eqs)) {
  if (eqs_.empty()) throw UsageError("a system needs at least one equation");
  const auto k = eqs_.front().orders();
  for (std::size_t l = 1; l < eqs_.size(); ++l) {
    if (eqs_[l].orders() != k) {
      throw UsageError("equation " + std::to_string(l) + " disagrees on unknowns or orders");
    }
  }
}

Int TldeSystem::min_coeff() const {
  Int m = eqs_.front().min_coeff();
  for (const auto& e : eqs_) m = std::min(m, e.min_coeff());
  return m;
}

Int TldeSystem::max_coeff() const {
  Int m = eqs_.front().max_coeff();
  for (const auto& e : eqs_) m = std::max(m, e.max_coeff());
  return m;
}

}  // namespace tropdiff
