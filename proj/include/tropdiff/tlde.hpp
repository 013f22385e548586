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

#include <cstddef>
#include <span>
#include <vector>

#include "tropdiff/ext_int.hpp"

namespace tropdiff {

/// A tropical linear differential equation
///
///   min_{j, 0<=i<=k_j} { a_{i,j} + u_j^{(i)} }
///
/// in n >= 1 unknowns. Coefficients are finite integers; block j holds
/// a_{0,j}..a_{k_j,j} and its length fixes the order k_j >= 1.
class Tlde {
 public:
  Tlde() = default;
  // coeffs[j][i] = a_{i,j}. Throws UsageError on empty input or a block
  // with fewer than two coefficients.
  explicit Tlde(std::vector<std::vector<Int>> coeffs);

  std::size_t unknowns() const { return coeffs_.size(); }
  Int order(std::size_t j) const {
    return static_cast<Int>(coeffs_.at(j).size()) - 1;
  }
  std::vector<Int> orders() const;
  std::span<const Int> block(std::size_t j) const { return coeffs_.at(j); }
  Int coeff(std::size_t i, std::size_t j) const { return coeffs_.at(j).at(i); }
  const std::vector<std::vector<Int>>& coeffs() const { return coeffs_; }

  // The single-unknown equation P_j(u_j) formed by block j.
  Tlde block_equation(std::size_t j) const;

  Int min_coeff() const;
  Int max_coeff() const;

  bool operator==(const Tlde&) const = default;

 private:
  std::vector<std::vector<Int>> coeffs_;
};

/// A list of equations over the same unknowns and orders.
class TldeSystem {
 public:
  TldeSystem() = default;
  // Throws UsageError when empty or when orders disagree.
  explicit TldeSystem(std::vector<Tlde> eqs);

  std::size_t size() const { return eqs_.size(); }
  std::size_t unknowns() const { return eqs_.front().unknowns(); }
  std::vector<Int> orders() const { return eqs_.front().orders(); }
  Int order(std::size_t j) const { return eqs_.front().order(j); }
  bool is_square() const { return size() == unknowns(); }
  const Tlde& equation(std::size_t l) const { return eqs_.at(l); }
  const std::vector<Tlde>& equations() const { return eqs_; }

  Int min_coeff() const;
  Int max_coeff() const;

  bool operator==(const TldeSystem&) const = default;

 private:
  std::vector<Tlde> eqs_;
};

}  // namespace tropdiff
