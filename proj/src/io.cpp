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

#include "tropdiff/io.hpp"

#include <fstream>
#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

namespace {

Int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw UsageError(where + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw UsageError(where + ": integer out of range");
  }
  return v.get<Int>();
}

const Json& as_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw UsageError(where + ": expected an array");
  return v;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

TldeSystem instance_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("instance: expected an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "unknowns" && key != "orders" && key != "equations") {
      throw UsageError("instance: unknown field \"" + key + "\"");
    }
  }
  for (const char* key : {"unknowns", "orders", "equations"}) {
    if (!j.contains(key)) throw UsageError(std::string("instance: missing field \"") + key + "\"");
  }
  const Int n = as_int(j["unknowns"], "unknowns");
  if (n < 1) throw UsageError("unknowns: must be at least 1");
  const auto& orders = as_array(j["orders"], "orders");
  if (orders.size() != static_cast<std::size_t>(n)) throw UsageError("orders: expected one entry per unknown");
  std::vector<Int> k;
  for (std::size_t x = 0; x < orders.size(); ++x) {
    k.push_back(as_int(orders[x], at("orders", x)));
    if (k.back() < 0) throw UsageError(at("orders", x) + ": must be nonnegative");
  }
  const auto& eqs = as_array(j["equations"], "equations");
  if (eqs.empty()) throw UsageError("equations: at least one equation required");
  std::vector<Tlde> out;
  for (std::size_t l = 0; l < eqs.size(); ++l) {
    const std::string el = at("equations", l);
    const auto& blocks = as_array(eqs[l], el);
    if (blocks.size() != k.size()) throw UsageError(el + ": expected one block per unknown");
    std::vector<std::vector<Int>> coeffs(k.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string eb = at(el, b);
      const auto& row = as_array(blocks[b], eb);
      if (row.size() != static_cast<std::size_t>(k[b]) + 1) {
        throw UsageError(eb + ": expected " + std::to_string(k[b] + 1) + " coefficients");
      }
      for (std::size_t i = 0; i < row.size(); ++i) coeffs[b].push_back(as_int(row[i], at(eb, i)));
    }
    out.emplace_back(std::move(coeffs));
  }
  return TldeSystem(std::move(out));
}

TldeSystem parse_instance(const std::string& text) { return instance_from_json(parse_text(text)); }

Json instance_to_json(const TldeSystem& sys) {
  Json j;
  j["unknowns"] = sys.unknowns();
  j["orders"] = sys.orders();
  Json eqs = Json::array();
  for (const auto& e : sys.equations()) eqs.push_back(e.coeffs());
  j["equations"] = std::move(eqs);
  return j;
}

std::string emit_instance(const TldeSystem& sys) { return instance_to_json(sys).dump(2) + "\n"; }

Json support_to_json(const MultiSupport& s) {
  Json j = Json::array();
  for (const auto& p : s.parts()) j.push_back(p.elems());
  return j;
}

MultiSupport support_from_json(const Json& j, std::size_t arity) {
  as_array(j, "support");
  if (j.size() != arity) throw UsageError("support: expected " + std::to_string(arity) + " parts");
  std::vector<Support> parts;
  for (std::size_t x = 0; x < j.size(); ++x) {
    const auto& part = as_array(j[x], at("support", x));
    std::vector<Int> e;
    for (std::size_t i = 0; i < part.size(); ++i) e.push_back(as_int(part[i], at(at("support", x), i)));
    parts.emplace_back(std::move(e));
  }
  return MultiSupport(std::move(parts));
}

Json solutions_to_json(const SolutionSet& s) {
  SolutionSet c = s;
  c.canonicalize();
  Json j;
  j["finite"] = Json::array();
  for (const auto& f : c.finite) j["finite"].push_back(support_to_json(f));
  j["rays"] = Json::array();
  for (const auto& r : c.rays) j["rays"].push_back(Json{{"base", support_to_json(r.base)}});
  if (!c.families.empty()) {
    j["families"] = Json::array();
    for (const auto& f : c.families) {
      j["families"].push_back(Json{{"base", support_to_json(f.base)}, {"groups", f.groups}});
    }
  }
  return j;
}

SolutionSet solutions_from_json(const Json& j, std::size_t arity) {
  if (!j.is_object()) throw UsageError("solutions: expected an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "finite" && key != "rays" && key != "families") {
      throw UsageError("solutions: unknown field \"" + key + "\"");
    }
  }
  if (!j.contains("finite") || !j.contains("rays")) throw UsageError("solutions: missing finite or rays");
  SolutionSet s;
  for (const auto& f : as_array(j["finite"], "finite")) s.finite.push_back(support_from_json(f, arity));
  for (const auto& r : as_array(j["rays"], "rays")) {
    if (!r.is_object() || !r.contains("base") || r.size() != 1) throw UsageError("rays: expected {\"base\": ...}");
    s.rays.push_back(ShiftRay{support_from_json(r["base"], arity)});
  }
  if (j.contains("families")) {
    for (const auto& f : as_array(j["families"], "families")) {
      if (!f.is_object() || !f.contains("base") || !f.contains("groups") || f.size() != 2) {
        throw UsageError("families: expected {\"base\": ..., \"groups\": ...}");
      }
      RayFamily fam{support_from_json(f["base"], arity), {}};
      for (const auto& g : as_array(f["groups"], "groups")) {
        std::vector<std::size_t> grp;
        for (const auto& x : as_array(g, "groups")) {
          const Int v = as_int(x, "groups");
          if (v < 0 || static_cast<std::size_t>(v) >= arity) throw UsageError("groups: index out of range");
          grp.push_back(static_cast<std::size_t>(v));
        }
        fam.groups.push_back(std::move(grp));
      }
      s.families.push_back(std::move(fam));
    }
  }
  s.canonicalize();
  return s;
}

SolutionSet parse_solutions(const std::string& text, std::size_t arity) {
  return solutions_from_json(parse_text(text), arity);
}

std::string emit_solutions(const SolutionSet& s) { return solutions_to_json(s).dump() + "\n"; }

std::string pretty(const MultiSupport& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    for (Int e : s.part(j).elems()) {
      if (!first) os << " + ";
      first = false;
      os << 't';
      if (s.arity() > 1) os << j + 1;
      os << '^' << e;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::string pretty(const ShiftRay& r) { return "t^i · (" + pretty(r.base) + ")"; }

std::string pretty(const RayFamily& f) {
  std::ostringstream os;
  os << "t^(";
  for (std::size_t g = 0; g < f.groups.size(); ++g) os << (g ? "," : "") << "i" << g + 1;
  os << ") · (" << pretty(f.base) << ") groups";
  for (const auto& g : f.groups) {
    os << " {";
    for (std::size_t x = 0; x < g.size(); ++x) os << (x ? "," : "") << g[x] + 1;
    os << '}';
  }
  return os.str();
}

namespace {

template <typename T>
void list(std::ostream& os, const char* name, const std::vector<T>& xs) {
  os << name << ": [";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << '"' << pretty(xs[i]) << '"';
  os << "]\n";
}

}  // namespace

std::string pretty(const SolutionSet& s) {
  SolutionSet c = s;
  c.canonicalize();
  std::ostringstream os;
  list(os, "finite", c.finite);
  list(os, "rays", c.rays);
  if (!c.families.empty()) list(os, "families", c.families);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropdiff
