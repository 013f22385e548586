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

// Instance and solution-set serialization.

#pragma once

#include <string>

#include <json.hpp>

#include "tropdiff/solution_set.hpp"
#include "tropdiff/tlde.hpp"

namespace tropdiff {

using Json = nlohmann::ordered_json;

/// Strict: exactly the keys "unknowns", "orders", "equations"; every
/// coefficient an integer; matrix shapes matching the orders. Errors are
/// UsageError naming the offending field.
TldeSystem instance_from_json(const Json& j);
TldeSystem parse_instance(const std::string& text);
Json instance_to_json(const TldeSystem& sys);
std::string emit_instance(const TldeSystem& sys);

Json support_to_json(const MultiSupport& s);
MultiSupport support_from_json(const Json& j, std::size_t arity);

/// {"finite": [...], "rays": [{"base": ...}]} plus "families" when present.
Json solutions_to_json(const SolutionSet& s);
SolutionSet solutions_from_json(const Json& j, std::size_t arity);
SolutionSet parse_solutions(const std::string& text, std::size_t arity);
std::string emit_solutions(const SolutionSet& s);

/// Multiplicative notation: "t^0 + t^3" for one unknown, "t1^0 + t2^3"
/// otherwise; the zero tuple prints as "0".
std::string pretty(const MultiSupport& s);
std::string pretty(const ShiftRay& r);
std::string pretty(const RayFamily& f);
std::string pretty(const SolutionSet& s);

/// Whole file contents; UsageError when unreadable.
std::string read_file(const std::string& path);

}  // namespace tropdiff
