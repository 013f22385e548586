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

#include "tropdiff/systems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "tropdiff/core.hpp"
#include "tropdiff/difference_constraints.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/multi_unknown.hpp"
#include "tropdiff/single_eq.hpp"

namespace tropdiff {

bool is_generic(const TldeSystem& sys) {
  if (!sys.is_square()) throw UsageError("genericity is defined for square systems");
  const std::size_t n = sys.unknowns();
  std::vector<std::vector<Int>> top(n, std::vector<Int>(n));  // top[l][j]
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) top[l][j] = a_value(sys.equation(l), j, sys.order(j));
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<Int> sums;
  do {
    Int s = 0;
    for (std::size_t l = 0; l < n; ++l) s = checked_add(s, top[l][sigma[l]]);
    if (!sums.insert(s).second) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::set<Int>> diffs(n);
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        for (Int alpha = 0; alpha < sys.order(j2); ++alpha) {
          diffs[l].insert(checked_sub(top[l][j], a_value(sys.equation(l), j2, alpha)));
        }
      }
    }
    for (std::size_t l1 = 0; l1 < n; ++l1) {
      for (std::size_t l2 = l1 + 1; l2 < n; ++l2) {
        for (Int d : diffs[l1]) {
          if (diffs[l2].count(d)) return false;
        }
      }
    }
  }
  return true;
}

bool is_regular_system(const TldeSystem& sys) {
  for (const auto& p : sys.equations()) {
    if (p.unknowns() == 1 ? !is_regular_1(p) : !is_regular_n(p)) return false;
  }
  return true;
}

namespace {

void bump(MinCount& mc, Int v) {
  if (mc.count == 0 || v < mc.value) {
    mc = {v, 1};
  } else if (v == mc.value) {
    ++mc.count;
  }
}

// Equation l restricted to a LowChoice: min{ C, b_j + q_j : j in high }.
struct Reduced {
  MinCount c;               // count == 0 means C = infinity
  std::vector<MinCount> b;  // parallel to choice.high
};

Reduced reduce(const Tlde& p, const LowChoice& ch) {
  Reduced r;
  for (std::size_t j = 0; j < p.unknowns(); ++j) {
    const Support& low = ch.low[j];
    if (low.empty()) continue;
    for (Int i = 0; i <= low.max(); ++i) {
      bump(r.c, checked_add(p.coeff(static_cast<std::size_t>(i), j), val(low, i).value()));
    }
  }
  for (std::size_t j : ch.high) {
    const Support& low = ch.low[j];
    MinCount mc;
    for (Int i = low.empty() ? 0 : low.max() + 1; i <= p.order(j); ++i) {
      bump(mc, checked_sub(p.coeff(static_cast<std::size_t>(i), j), i));
    }
    r.b.push_back(mc);
  }
  return r;
}

struct Option {
  std::vector<BranchConstraint> cons;
  std::uint32_t witnesses = 0;  // bitmask over positions in choice.high
};

std::vector<Option> equation_options(const Reduced& r, const LowChoice& ch, std::size_t l) {
  const auto& hi = ch.high;
  const bool has_c = r.c.count > 0;
  const Int c = r.c.value;
  std::vector<Option> out;
  auto mk = [&](ConstraintKind k, std::size_t a, std::size_t b, Int v, int w1, int w2) {
    return BranchConstraint{k, a, b, v, l, w1, w2};
  };
  if (has_c && r.c.count >= 2) {
    Option o;
    for (std::size_t x = 0; x < hi.size(); ++x) {
      o.cons.push_back(mk(ConstraintKind::kLower, hi[x], 0, checked_sub(c, r.b[x].value), -1, -1));
    }
    out.push_back(std::move(o));
  }
  for (std::size_t x = 0; x < hi.size(); ++x) {
    const int wx = static_cast<int>(hi[x]);
    const Int bx = r.b[x].value;
    if (r.b[x].count >= 2) {
      Option o;
      o.witnesses = 1u << x;
      if (has_c) o.cons.push_back(mk(ConstraintKind::kUpper, hi[x], 0, checked_sub(c, bx), wx, wx));
      for (std::size_t y = 0; y < hi.size(); ++y) {
        if (y == x) continue;
        o.cons.push_back(mk(ConstraintKind::kDiffUpper, hi[x], hi[y], checked_sub(r.b[y].value, bx), wx, wx));
      }
      out.push_back(std::move(o));
    }
    if (has_c) {
      Option o;
      o.witnesses = 1u << x;
      o.cons.push_back(mk(ConstraintKind::kFix, hi[x], 0, checked_sub(c, bx), -1, wx));
      for (std::size_t y = 0; y < hi.size(); ++y) {
        if (y == x) continue;
        o.cons.push_back(mk(ConstraintKind::kLower, hi[y], 0, checked_sub(c, r.b[y].value), -1, wx));
      }
      out.push_back(std::move(o));
    }
    for (std::size_t y = x + 1; y < hi.size(); ++y) {
      const int wy = static_cast<int>(hi[y]);
      Option o;
      o.witnesses = (1u << x) | (1u << y);
      o.cons.push_back(mk(ConstraintKind::kDifference, hi[x], hi[y], checked_sub(r.b[y].value, bx), wx, wy));
      if (has_c) o.cons.push_back(mk(ConstraintKind::kUpper, hi[x], 0, checked_sub(c, bx), wx, wy));
      for (std::size_t z = 0; z < hi.size(); ++z) {
        if (z == x || z == y) continue;
        o.cons.push_back(mk(ConstraintKind::kDiffUpper, hi[x], hi[z], checked_sub(r.b[z].value, bx), wx, wy));
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

void apply(DifferenceSystem& ds, const BranchConstraint& bc, const std::vector<std::size_t>& var) {
  const std::size_t a = var[bc.a];
  switch (bc.kind) {
    case ConstraintKind::kFix:
      ds.add_fix(a, bc.c);
      break;
    case ConstraintKind::kDifference:
      ds.add_diff_eq(a, var[bc.b], bc.c);
      break;
    case ConstraintKind::kDiffUpper:
      ds.add_le(a, var[bc.b], bc.c);
      break;
    case ConstraintKind::kLower:
      ds.add_lower(a, bc.c);
      break;
    case ConstraintKind::kUpper:
      ds.add_upper(a, bc.c);
      break;
  }
}

// Search constants. Two high exponents whose gap reaches `gap` cannot see
// each other's terms at the minimum, and a high exponent above `base` lies
// above every constant term.
struct Thresholds {
  Int base = 0;  // v0
  Int gap = 1;   // G
  Int cap = 0;
};

Thresholds thresholds(const TldeSystem& sys) {
  const std::size_t n = sys.unknowns();
  Int spread = 0;
  Int bc = 0;
  for (const auto& p : sys.equations()) {
    Int lo = 0, hi = 0, maxc = 0;
    bool first = true, first_c = true;
    for (std::size_t j = 0; j < n; ++j) {
      for (Int i = 0; i <= p.order(j); ++i) {
        const Int a = p.coeff(static_cast<std::size_t>(i), j);
        const Int v = a - i;
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
        if (i < p.order(j)) {
          const Int c = a + p.order(j) - 1 - i;
          maxc = first_c ? c : std::max(maxc, c);
          first_c = false;
        }
      }
    }
    spread = std::max(spread, checked_sub(hi, lo));
    bc = std::max(bc, checked_sub(maxc, lo));
  }
  Thresholds t;
  Int kmax = 0;
  for (std::size_t j = 0; j < n; ++j) kmax = std::max(kmax, sys.order(j));
  t.base = std::max(bc, kmax);
  t.gap = checked_add(spread, 1);
  t.cap = checked_add(t.base, checked_mul(static_cast<Int>(n), t.gap));
  return t;
}

struct Split {
  std::vector<Support> low;
  std::vector<std::size_t> high;
  std::vector<Int> q;  // parallel to high
};

Split split(const TldeSystem& sys, const MultiSupport& s) {
  Split out;
  for (std::size_t j = 0; j < s.arity(); ++j) {
    const Support& p = s.part(j);
    if (!p.empty() && p.max() >= sys.order(j)) {
      out.low.push_back(p.without(p.max()));
      out.high.push_back(j);
      out.q.push_back(p.max());
    } else {
      out.low.push_back(p);
    }
  }
  return out;
}

struct GapInfo {
  bool too_large = false;
  std::vector<std::vector<std::size_t>> groups;  // outermost first
};

GapInfo gaps(const std::vector<std::size_t>& high, const std::vector<Int>& q, const Thresholds& th) {
  std::vector<std::pair<Int, std::size_t>> above;
  for (std::size_t x = 0; x < high.size(); ++x) {
    if (q[x] >= th.base) above.emplace_back(q[x], high[x]);
  }
  std::sort(above.begin(), above.end());
  GapInfo g;
  Int prev = th.base;
  for (std::size_t x = 0; x < above.size(); ++x) {
    const Int d = above[x].first - prev;
    if (d > th.gap) {
      g.too_large = true;
      return g;
    }
    if (d == th.gap) {
      std::vector<std::size_t> grp;
      for (std::size_t y = x; y < above.size(); ++y) grp.push_back(above[y].second);
      std::sort(grp.begin(), grp.end());
      g.groups.push_back(std::move(grp));
    }
    prev = above[x].first;
  }
  return g;
}

class Worker {
 public:
  Worker(const TldeSystem& sys, const Thresholds& th, std::atomic<std::uint64_t>& nodes,
         std::uint64_t budget)
      : sys_(sys), th_(th), nodes_(nodes), budget_(budget) {}

  void run(const LowChoice& ch) {
    ch_ = &ch;
    if (ch.high.empty()) {
      MultiSupport s(ch.low);
      tick();
      if (is_minimal_solution(sys_, s)) found_.insert(s);
      return;
    }
    var_.assign(sys_.unknowns(), 0);
    for (std::size_t x = 0; x < ch.high.size(); ++x) var_[ch.high[x]] = x + 1;
    options_.clear();
    for (std::size_t l = 0; l < sys_.size(); ++l) {
      options_.push_back(equation_options(reduce(sys_.equation(l), ch), ch, l));
    }
    DifferenceSystem ds(ch.high.size());
    for (std::size_t x = 0; x < ch.high.size(); ++x) ds.add_lower(x + 1, sys_.order(ch.high[x]));
    choose(0, 0, ds);
  }

  std::set<MultiSupport>& found() { return found_; }

 private:
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      throw ResourceError("search truncated: node budget exhausted");
    }
  }

  void choose(std::size_t l, std::uint32_t mask, DifferenceSystem ds) {
    tick();
    if (!ds.solve()) return;
    if (l == options_.size()) {
      if (mask != (1u << ch_->high.size()) - 1) return;
      enumerate(0, ds);
      return;
    }
    for (const auto& o : options_[l]) {
      DifferenceSystem next = ds;
      for (const auto& bc : o.cons) apply(next, bc, var_);
      choose(l + 1, mask | o.witnesses, std::move(next));
    }
  }

  void enumerate(std::size_t x, DifferenceSystem& ds) {
    tick();
    if (!ds.solve()) return;
    const auto& hi = ch_->high;
    if (x == hi.size()) {
      leaf(ds);
      return;
    }
    const Int lo = *ds.lower(x + 1);
    ExtInt up = ds.upper(x + 1);
    const Int top = up.is_finite() ? std::min(up.value(), th_.cap) : th_.cap;
    for (Int v = lo; v <= top; ++v) {
      DifferenceSystem next = ds;
      next.add_fix(x + 1, v);
      enumerate(x + 1, next);
    }
  }

  void leaf(const DifferenceSystem& ds) {
    const auto& hi = ch_->high;
    std::vector<Int> q(hi.size());
    for (std::size_t x = 0; x < hi.size(); ++x) q[x] = *ds.lower(x + 1);
    if (gaps(hi, q, th_).too_large) return;
    MultiSupport s(ch_->low);
    for (std::size_t x = 0; x < hi.size(); ++x) s.part(hi[x]) = s.part(hi[x]).with(q[x]);
    if (!visited_.insert(s).second) return;
    if (is_minimal_solution(sys_, s)) found_.insert(s);
  }

  const TldeSystem& sys_;
  const Thresholds& th_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  const LowChoice* ch_ = nullptr;
  std::vector<std::size_t> var_;
  std::vector<std::vector<Option>> options_;
  std::set<MultiSupport> visited_;
  std::set<MultiSupport> found_;
};

std::vector<LowChoice> low_choices(const TldeSystem& sys, bool pruned) {
  const std::size_t n = sys.unknowns();
  const std::size_t total = 2 * sys.size();
  std::vector<LowChoice> out;
  std::vector<Support> low(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t used) {
    if (j == n) {
      const std::size_t room = total - used;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        const auto cnt = static_cast<std::size_t>(__builtin_popcount(m));
        if (pruned && cnt != n) continue;
        if (cnt > room || used + cnt == 0) continue;
        LowChoice ch{low, {}};
        for (std::size_t x = 0; x < n; ++x) {
          if (m & (1u << x)) ch.high.push_back(x);
        }
        out.push_back(std::move(ch));
      }
      return;
    }
    const Int k = sys.order(j);
    const std::size_t cap = pruned ? n : total;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
      const auto cnt = static_cast<std::size_t>(__builtin_popcount(m));
      if (used + cnt > cap) continue;
      std::vector<Int> el;
      for (Int i = 0; i < k; ++i) {
        if (m & (1u << i)) el.push_back(i);
      }
      low[j] = Support(std::move(el));
      rec(j + 1, used + cnt);
    }
    low[j] = Support();
  };
  rec(0, 0);
  return out;
}

// Moves the top exponent of every part in `grp` down by `d`.
MultiSupport lowered(const MultiSupport& s, const std::vector<std::size_t>& grp, Int d) {
  MultiSupport out = s;
  for (std::size_t j : grp) {
    const Support& p = s.part(j);
    out.part(j) = p.without(p.max()).with(p.max() - d);
  }
  return out;
}

RayFamily walk_back(const TldeSystem& sys, const MultiSupport& gen, const GapInfo& gi,
                    const Thresholds& th, const std::set<MultiSupport>& minimal,
                    const std::vector<std::size_t>& high) {
  const std::size_t t_count = gi.groups.size();
  std::vector<Int> walked(t_count, 0);
  auto point = [&](const std::vector<Int>& d) {
    MultiSupport s = gen;
    for (std::size_t t = 0; t < t_count; ++t) {
      if (d[t] > 0) s = lowered(s, gi.groups[t], d[t]);
    }
    return s;
  };
  auto valid = [&](const MultiSupport& s) {
    for (std::size_t j : high) {
      const Support& p = s.part(j);
      if (p.max() < sys.order(j)) return false;
      if (p.size() != gen.part(j).size()) return false;
    }
    return minimal.count(s) > 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < t_count; ++t) {
      const bool whole = gi.groups[t].size() == high.size();
      if (!whole && walked[t] + 1 >= th.gap) continue;
      // Every combination of the other groups' walked offsets must stay minimal.
      std::vector<Int> d(t_count, 0);
      d[t] = walked[t] + 1;
      bool ok = true;
      std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (!ok) return;
        if (s == t_count) {
          ok = valid(point(d));
          return;
        }
        if (s == t) {
          rec(s + 1);
          return;
        }
        for (d[s] = 0; d[s] <= walked[s] && ok; ++d[s]) rec(s + 1);
      };
      rec(0);
      if (ok) {
        ++walked[t];
        changed = true;
      }
    }
  }
  return RayFamily{point(walked), gi.groups};
}

bool family_subsumes(const RayFamily& big, const RayFamily& small) {
  if (!big.contains(small.base)) return false;
  for (const auto& g : small.groups) {
    if (std::find(big.groups.begin(), big.groups.end(), g) == big.groups.end()) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<BranchConstraint>> branches(const TldeSystem& sys, const LowChoice& choice) {
  if (choice.low.size() != sys.unknowns()) throw ArityError("low choice arity mismatch");
  std::vector<std::vector<Option>> opts;
  for (std::size_t l = 0; l < sys.size(); ++l) {
    opts.push_back(equation_options(reduce(sys.equation(l), choice), choice, l));
  }
  const std::uint32_t full = (1u << choice.high.size()) - 1;
  std::vector<std::vector<BranchConstraint>> out;
  std::vector<BranchConstraint> cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t l, std::uint32_t mask) {
    if (l == opts.size()) {
      if (mask == full) out.push_back(cur);
      return;
    }
    for (const auto& o : opts[l]) {
      const std::size_t keep = cur.size();
      cur.insert(cur.end(), o.cons.begin(), o.cons.end());
      rec(l + 1, mask | o.witnesses);
      cur.resize(keep);
    }
  };
  rec(0, 0);
  return out;
}

SolutionSet solve_system(const TldeSystem& sys, const SolveOptions& opts) {
  const std::size_t n = sys.unknowns();
  if (n > 16) throw UsageError("too many unknowns for the exact solver");
  for (std::size_t j = 0; j < n; ++j) {
    if (sys.order(j) > 24) throw UsageError("order too large for the exact solver");
  }
  const bool pruned = opts.prune && sys.is_square() && is_generic(sys) && is_regular_system(sys);
  const Thresholds th = thresholds(sys);
  const auto choices = low_choices(sys, pruned);

  std::atomic<std::uint64_t> nodes{0};
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(choices.size())));
  std::vector<Worker> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(sys, th, nodes, opts.node_budget);
  std::vector<std::exception_ptr> errors(jobs);
  auto body = [&](unsigned w) {
    try {
      for (std::size_t c = w; c < choices.size(); c += jobs) workers[w].run(choices[c]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::set<MultiSupport> minimal;
  for (auto& w : workers) minimal.merge(w.found());

  // Points with a gap of exactly G generate infinite families.
  struct Gen {
    MultiSupport s;
    GapInfo gi;
    std::vector<std::size_t> high;
  };
  std::vector<Gen> gens;
  for (const auto& s : minimal) {
    Split sp = split(sys, s);
    GapInfo gi = gaps(sp.high, sp.q, th);
    if (!gi.groups.empty()) gens.push_back({s, std::move(gi), std::move(sp.high)});
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Gen& a, const Gen& b) { return a.gi.groups.size() > b.gi.groups.size(); });
  std::vector<RayFamily> fams;
  for (const auto& g : gens) {
    bool covered = false;
    for (const auto& f : fams) {
      if (f.contains(g.s)) {
        covered = true;
        break;
      }
    }
    if (!covered) fams.push_back(walk_back(sys, g.s, g.gi, th, minimal, g.high));
  }
  std::vector<RayFamily> kept;
  for (std::size_t a = 0; a < fams.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < fams.size() && !drop; ++b) {
      if (a == b || !family_subsumes(fams[b], fams[a])) continue;
      // Keep the first of two mutually subsuming families.
      drop = !family_subsumes(fams[a], fams[b]) || b < a;
    }
    if (!drop) kept.push_back(fams[a]);
  }

  SolutionSet out;
  for (const auto& s : minimal) {
    bool member = false;
    for (const auto& f : kept) {
      if (f.contains(s)) {
        member = true;
        break;
      }
    }
    if (!member) out.finite.push_back(s);
  }
  for (auto& f : kept) {
    const Split sp = split(sys, f.base);
    const bool no_low = std::all_of(sp.low.begin(), sp.low.end(), [](const Support& p) { return p.empty(); });
    if (no_low && f.groups.size() == 1 && f.groups[0] == sp.high) {
      out.rays.push_back({f.base});
    } else {
      out.families.push_back(std::move(f));
    }
  }
  out.canonicalize();
  return out;
}

bool is_holonomic_system(const TldeSystem& sys, const SolveOptions& opts) {
  return solve_system(sys, opts).holonomic();
}

std::string to_string(TypeN2 t) {
  switch (t) {
    case TypeN2::kUV:
      return "uv";
    case TypeN2::kUU:
      return "uu";
    case TypeN2::kVV:
      return "vv";
    case TypeN2::kU:
      return "u";
    case TypeN2::kV:
      return "v";
  }
  return "?";
}

namespace {

// Sign pattern check for the low elements of side `self` against `other`.
bool side_consistent(const SolutionTypeN2& r, std::size_t self, std::size_t other, Int a,
                     const std::vector<std::pair<Int, Int>>& a_prime, bool single, Int q_self,
                     Int q_other) {
  const auto& s1 = r.attaining[0][self];
  const auto& s2 = r.attaining[1][self];
  const auto& o1 = r.attaining[0][other];
  const auto& o2 = r.attaining[1][other];
  const Support qs{q_self};
  const Support qo{q_other};
  for (const auto& [x, ap] : a_prime) {
    const Support xs{x};
    if (single) {
      if (s1 == xs && o1 == qo && o2 == qo && s2 == qs) {
        if (!(a >= 0 && ap >= 0)) return false;
      } else if (s1 == Support{x, q_self} && o1.empty() && s2 == qs && o2 == qo) {
        if (!(a <= 0 && ap + a >= 0)) return false;
      } else if (s1 == qs && o1 == qo && o2 == qo && s2 == xs) {
        if (!(a <= 0 && ap <= 0)) return false;
      } else if (s1 == qs && o1 == qo && s2 == Support{x, q_self} && o2.empty()) {
        if (!(a >= 0 && ap + a <= 0)) return false;
      }
      continue;
    }
    if (s1 == xs && o1.size() == 1) {
      if (!(a >= 0 && ap + a >= 0)) return false;
    }
    if (s1.contains(x) && s1.size() == 2 && o1.empty()) {
      if (!(a <= 0 && ap >= 0)) return false;
    }
    if (s2 == xs && o2.size() == 1) {
      if (!(a <= 0 && ap + a <= 0)) return false;
    }
    if (s2.contains(x) && s2.size() == 2 && o2.empty()) {
      if (!(a >= 0 && ap <= 0)) return false;
    }
  }
  return true;
}

}  // namespace

SolutionTypeN2 classify_solution_n2(const TldeSystem& sys, const MultiSupport& s) {
  if (sys.size() != 2 || sys.unknowns() != 2) throw UsageError("classification needs a 2x2 system");
  if (!is_minimal_solution(sys, s)) throw UsageError("not a minimal solution");
  const Int ku = sys.order(0);
  const Int kv = sys.order(1);
  for (std::size_t j = 0; j < 2; ++j) {
    const Support& p = s.part(j);
    if (p.empty() || p.max() < sys.order(j) ||
        (p.size() >= 2 && p.elems()[p.size() - 2] >= sys.order(j))) {
      throw UsageError("each part needs exactly one exponent at or above its order");
    }
  }

  SolutionTypeN2 r;
  r.attaining.assign(2, std::vector<Support>(2));
  for (std::size_t l = 0; l < 2; ++l) {
    const Tlde& p = sys.equation(l);
    const ExtInt m = trop_eval(p, s);
    for (std::size_t j = 0; j < 2; ++j) {
      const Support& part = s.part(j);
      for (Int i = 0; i <= p.order(j); ++i) {
        const ExtInt v = val(part, i);
        if (v.is_infinite()) continue;
        if (ExtInt(p.coeff(static_cast<std::size_t>(i), j)) + v == m) {
          r.attaining[l][j] = r.attaining[l][j].with(i + v.value());
        }
      }
    }
  }

  int mult[2] = {0, 0};
  for (std::size_t j = 0; j < 2; ++j) {
    for (Int x : s.part(j).elems()) {
      if (x >= sys.order(j)) continue;
      const int c = static_cast<int>(r.attaining[0][j].contains(x)) + static_cast<int>(r.attaining[1][j].contains(x));
      mult[j] += std::max(1, c);
    }
  }
  if (mult[0] == 1 && mult[1] == 1) {
    r.label = TypeN2::kUV;
  } else if (mult[0] == 2 && mult[1] == 0) {
    r.label = TypeN2::kUU;
  } else if (mult[0] == 0 && mult[1] == 2) {
    r.label = TypeN2::kVV;
  } else if (mult[0] == 1 && mult[1] == 0) {
    r.label = TypeN2::kU;
  } else if (mult[0] == 0 && mult[1] == 1) {
    r.label = TypeN2::kV;
  } else {
    throw UsageError("solution does not fit any of the five shapes");
  }

  const Tlde& p1 = sys.equation(0);
  const Tlde& p2 = sys.equation(1);
  const Int au1 = a_value(p1, 0, ku), au2 = a_value(p2, 0, ku);
  const Int av1 = a_value(p1, 1, kv), av2 = a_value(p2, 1, kv);
  r.a = au1 - au2 - av1 + av2;
  for (Int x : s.part(0).elems()) {
    if (x < ku) r.a_prime_u.emplace_back(x, a_value(p2, 0, x) - a_value(p1, 0, x) - av2 + av1);
  }
  for (Int x : s.part(1).elems()) {
    if (x < kv) r.a_prime_v.emplace_back(x, a_value(p2, 1, x) - a_value(p1, 1, x) - au2 + au1);
  }
  const Int qu = s.part(0).max();
  const Int qv = s.part(1).max();
  const bool u_side = r.label != TypeN2::kVV && r.label != TypeN2::kV;
  const bool v_side = r.label != TypeN2::kUU && r.label != TypeN2::kU;
  const bool single = r.label == TypeN2::kU || r.label == TypeN2::kV;
  r.rigidity_consistent = (!u_side || side_consistent(r, 0, 1, r.a, r.a_prime_u, single, qu, qv)) &&
                          (!v_side || side_consistent(r, 1, 0, -r.a, r.a_prime_v, single, qv, qu));
  return r;
}

}  // namespace tropdiff
