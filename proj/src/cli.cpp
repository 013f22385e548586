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

#include "tropdiff/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tropdiff/errors.hpp"
#include "tropdiff/generators.hpp"
#include "tropdiff/inversions.hpp"
#include "tropdiff/io.hpp"
#include "tropdiff/multi_unknown.hpp"
#include "tropdiff/oracle.hpp"
#include "tropdiff/single_eq.hpp"
#include "tropdiff/systems.hpp"

namespace tropdiff {

namespace {

struct Common {
  std::string input;
  std::string format = "pretty";
  std::optional<Int> bound;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_input) {
  if (with_input) sub->add_option("--input", c.input, "Instance file (JSON)")->required();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  sub->add_option("--bound", c.bound, "Exponent cap for brute-force search");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("TROPDIFF_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t v = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [p, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || p != end || v == 0) throw UsageError("TROPDIFF_BUDGET must be a positive integer");
  return v;
}

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  o.jobs = c.jobs;
  if (auto b = env_budget()) o.node_budget = *b;
  return o;
}

OracleLimits oracle_limits() {
  OracleLimits l;
  if (auto b = env_budget()) l.max_candidates = *b;
  return l;
}

TldeSystem load(const Common& c) { return parse_instance(read_file(c.input)); }

SolutionSet solve_any(const TldeSystem& sys, const Common& c) {
  if (sys.size() == 1) {
    return sys.unknowns() == 1 ? minimal_solutions_1(sys.equation(0)) : minimal_solutions_n(sys.equation(0));
  }
  return solve_system(sys, solve_options(c));
}

SearchBox box_for(const TldeSystem& sys, const Common& c) {
  SearchBox box = auto_box(sys);
  if (c.bound) {
    if (*c.bound < 0) throw UsageError("--bound must be nonnegative");
    std::fill(box.cap.begin(), box.cap.end(), *c.bound);
  }
  return box;
}

bool in_box(const MultiSupport& s, const SearchBox& box) {
  if (s.total_size() > box.total_size) return false;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    const auto& p = s.part(j);
    if (p.size() > box.part_size[j]) return false;
    if (!p.empty() && p.max() > box.cap[j]) return false;
  }
  return true;
}

void print_flags(std::ostream& out, const Common& c, const std::vector<std::pair<std::string, std::optional<bool>>>& f) {
  if (c.format == "json") {
    Json j;
    for (const auto& [k, v] : f) j[k] = v ? Json(*v) : Json(nullptr);
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : f) out << k << ": " << (v ? (*v ? "true" : "false") : "n/a") << "\n";
}

int cmd_classify(const Common& c, std::ostream& out) {
  const TldeSystem sys = load(c);
  std::optional<bool> holo, reg, gen;
  if (sys.is_square()) gen = is_generic(sys);
  if (sys.size() == 1 && sys.unknowns() == 1) {
    holo = is_holonomic(sys.equation(0));
    reg = is_regular_1(sys.equation(0));
  } else if (sys.size() == 1) {
    holo = minimal_solutions_n(sys.equation(0)).holonomic();
    reg = is_regular_n(sys.equation(0));
  } else {
    holo = is_holonomic_system(sys, solve_options(c));
    if (sys.is_square()) reg = is_regular_system(sys);
  }
  print_flags(out, c, {{"holonomic", holo}, {"regular", reg}, {"generic", gen}});
  return kExitOk;
}

void print_set(std::ostream& out, const Common& c, const SolutionSet& s) {
  if (c.format == "json") {
    out << emit_solutions(s);
  } else {
    out << pretty(s);
  }
}

int cmd_solve(const Common& c, std::ostream& out) {
  print_set(out, c, solve_any(load(c), c));
  return kExitOk;
}

int cmd_oracle(const Common& c, std::ostream& out) {
  const TldeSystem sys = load(c);
  SolutionSet s;
  s.finite = oracle_minimal(sys, box_for(sys, c), oracle_limits());
  print_set(out, c, s);
  return kExitOk;
}

int cmd_infinity(const Common& c, std::ostream& out) {
  const TldeSystem sys = load(c);
  if (sys.size() != 1 || sys.unknowns() != 1) throw UsageError("infinity: needs a single equation in one unknown");
  const auto inf = infinity_solutions(sys.equation(0));
  if (c.format == "json") {
    Json j;
    j["negative_ray"] = inf.negative_ray;
    j["pair_r"] = inf.pair_r ? Json(*inf.pair_r) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "negative_ray: " << (inf.negative_ray ? "{-r} for every r >= 1" : "none") << "\n";
    out << "pair: ";
    if (inf.pair_r) {
      out << "{0, -" << *inf.pair_r << "}\n";
    } else {
      out << "none\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const Common& c, std::ostream& out) {
  const TldeSystem sys = load(c);
  const SearchBox box = box_for(sys, c);
  const SolutionSet s = solve_any(sys, c);
  const Int top = *std::max_element(box.cap.begin(), box.cap.end());
  std::set<MultiSupport> mine;
  for (const auto& m : s.expand(top)) {
    if (in_box(m, box)) mine.insert(m);
  }
  const auto oracle = oracle_minimal(sys, box, oracle_limits());
  const std::set<MultiSupport> theirs(oracle.begin(), oracle.end());
  if (mine == theirs) {
    out << "MATCH\n";
    return kExitOk;
  }
  out << "MISMATCH\n";
  for (const auto& m : mine) {
    if (!theirs.count(m)) out << "  solver only: " << pretty(m) << "\n";
  }
  for (const auto& m : theirs) {
    if (!mine.count(m)) out << "  oracle only: " << pretty(m) << "\n";
  }
  return kExitMismatch;
}

std::vector<Int> parse_list(const std::string& text, const char* what) {
  std::vector<Int> v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    Int x = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
      throw UsageError(std::string(what) + ": expected a comma-separated integer list");
    }
    v.push_back(x);
  }
  return v;
}

struct GenArgs {
  std::string kind;
  Int ku = 1, kv = 1, base = 0, step = 2, lo = -5, hi = 5;
  std::size_t unknowns = 2;
  std::string orders, family;
};

int cmd_generate(const Common& c, const GenArgs& g, std::ostream& out) {
  GeneratorOptions opts;
  opts.seed = c.seed;
  if (g.kind == "construction-n2") {
    out << emit_instance(construct_n2(g.ku, g.kv, g.base, g.step, opts));
    return kExitOk;
  }
  std::vector<Int> orders = parse_list(g.orders, "--orders");
  if (g.kind == "lower") {
    LowerBoundPlan plan;
    plan.n = orders.size();
    plan.orders = orders;
    for (Int p : parse_list(g.family, "--family")) {
      if (p < 0) throw UsageError("--family: indices must be nonnegative");
      plan.family.push_back(static_cast<std::size_t>(p));
    }
    out << emit_instance(construct_lower(plan, g.base, g.step, opts));
    return kExitOk;
  }
  if (orders.empty()) orders.assign(g.unknowns, 1);
  out << emit_instance(random_system(orders.size(), orders, g.lo, g.hi, opts));
  return kExitOk;
}

int cmd_bounds(const Common& c, const std::string& orders_text, std::ostream& out) {
  std::vector<Int> orders;
  if (!c.input.empty()) {
    orders = load(c).orders();
  } else if (!orders_text.empty()) {
    orders = parse_list(orders_text, "--orders");
  } else {
    throw UsageError("bounds: give --input or --orders");
  }
  const std::uint64_t naive = naive_upper_bound(orders);
  const LeadingTerm lead = leading_upper(orders.size(), orders);
  std::optional<std::uint64_t> sharp;
  if (orders.size() == 2) sharp = sharp_bound_n2(orders[0], orders[1]);
  if (c.format == "json") {
    Json j;
    j["naive"] = naive;
    j["sharp_n2"] = sharp ? Json(*sharp) : Json(nullptr);
    j["leading"] = Json{{"num", lead.num}, {"den", lead.den}, {"plus_lower_order", lead.plus_lower_order}};
    out << j.dump() << "\n";
  } else {
    out << "naive: " << naive << "\n";
    out << "sharp_n2: " << (sharp ? std::to_string(*sharp) : "n/a") << "\n";
    out << "leading: " << lead.num << "/" << lead.den << (lead.plus_lower_order ? " + lower order" : "") << "\n";
  }
  return kExitOk;
}

PermFamily parse_perms(const std::string& text) {
  std::vector<Perm> ps;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    Perm w;
    for (Int x : parse_list(item, "--perms")) {
      if (x < 0) throw UsageError("--perms: entries must be nonnegative");
      w.push_back(static_cast<std::size_t>(x));
    }
    ps.push_back(std::move(w));
  }
  return PermFamily(std::move(ps));
}

int cmd_inversions(const Common& c, const std::string& action, const std::string& perms, std::size_t n,
                   std::size_t r, std::ostream& out) {
  if (action == "count") {
    if (perms.empty()) throw UsageError("inversions count: give --perms");
    const auto count = count_inversions(parse_perms(perms));
    if (c.format == "json") {
      out << Json{{"inversions", count}}.dump() << "\n";
    } else {
      out << "inversions: " << count << "\n";
    }
    return kExitOk;
  }
  InversionSearchOptions opts;
  opts.jobs = c.jobs;
  if (auto b = env_budget()) opts.max_families = *b;
  const auto best = max_inversions(n, r, opts);
  std::uint64_t cap = 1;  // C(r, n)
  for (std::size_t i = 1; i <= n; ++i) cap = i > r ? 0 : cap * (r - n + i) / i;
  if (c.format == "json") {
    out << Json{{"n", n}, {"r", r}, {"max", best}, {"binomial_cap", cap}}.dump() << "\n";
  } else {
    out << "max: " << best << "\nbinomial_cap: " << cap << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal solutions of tropical linear differential equations", "tropdiff"};
  app.require_subcommand(1);
  Common c;

  auto* classify = app.add_subcommand("classify", "Holonomic, regular and generic flags");
  auto* solve = app.add_subcommand("solve", "Minimal solutions: finite part and rays");
  auto* oracle = app.add_subcommand("oracle", "Brute-force minimal solutions in a box");
  auto* infinity = app.add_subcommand("infinity", "Solutions at infinity (one unknown)");
  auto* verify = app.add_subcommand("verify", "Compare the solver against the brute-force oracle");
  for (auto* s : {classify, solve, oracle, infinity, verify}) add_common(s, c, true);

  GenArgs g;
  auto* generate = app.add_subcommand("generate", "Emit an instance file");
  add_common(generate, c, false);
  generate->add_option("kind", g.kind)->required()->check(CLI::IsMember({"construction-n2", "lower", "random"}));
  generate->add_option("--ku", g.ku, "Order of u (construction-n2)");
  generate->add_option("--kv", g.kv, "Order of v (construction-n2)");
  generate->add_option("--base", g.base, "Base coefficient");
  generate->add_option("--step", g.step, "Minimum rise of increasing blocks");
  generate->add_option("--orders", g.orders, "Comma-separated orders (lower, random)");
  generate->add_option("--family", g.family, "Comma-separated 0-based family indices (lower)");
  generate->add_option("--unknowns", g.unknowns, "Unknowns when --orders is absent (random)");
  generate->add_option("--lo", g.lo, "Smallest coefficient (random)");
  generate->add_option("--hi", g.hi, "Largest coefficient (random)");

  std::string bound_orders;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the number of minimal solutions");
  add_common(bounds, c, false);
  bounds->add_option("--input", c.input, "Instance file (JSON)");
  bounds->add_option("--orders", bound_orders, "Comma-separated orders");

  std::string action, perms;
  std::size_t inv_n = 2, inv_r = 3;
  auto* inversions = app.add_subcommand("inversions", "Inversions of permutation families");
  add_common(inversions, c, false);
  inversions->add_option("action", action)->required()->check(CLI::IsMember({"count", "max"}));
  inversions->add_option("--perms", perms, "0-based permutations, e.g. \"0,1,2;2,1,0\"");
  inversions->add_option("-n", inv_n, "Family size (max)");
  inversions->add_option("-r", inv_r, "Permutation size (max)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(c, out);
    if (solve->parsed()) return cmd_solve(c, out);
    if (oracle->parsed()) return cmd_oracle(c, out);
    if (infinity->parsed()) return cmd_infinity(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (generate->parsed()) return cmd_generate(c, g, out);
    if (bounds->parsed()) return cmd_bounds(c, bound_orders, out);
    return cmd_inversions(c, action, perms, inv_n, inv_r, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace tropdiff
