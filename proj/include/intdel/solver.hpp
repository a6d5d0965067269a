#ifndef INTDEL_SOLVER_HPP
#define INTDEL_SOLVER_HPP

#include <atomic>
#include <climits>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <vector>

#include "intdel/caterpillar.hpp"
#include "intdel/graph.hpp"
#include "intdel/hole_cover.hpp"
#include "intdel/modules.hpp"
#include "intdel/obstructions.hpp"
#include "intdel/recognition.hpp"

namespace intdel {

// Either a deletion set (ascending root-coordinate ids) or NO.
struct Solution {
  bool is_no = true;
  std::vector<int> q;

  static Solution no() { return {}; }
  static Solution of(std::vector<int> ids) {
    Solution s;
    s.is_no = false;
    std::sort(ids.begin(), ids.end());
    s.q = std::move(ids);
    return s;
  }
  int size() const { return is_no ? INT_MAX : int(q.size()); }
};

// Strictly better: smaller, or equal-size and lexicographically smaller.
inline bool better_solution(const Solution& a, const Solution& b) {
  if (a.is_no) return false;
  if (b.is_no) return true;
  if (a.q.size() != b.q.size()) return a.q.size() < b.q.size();
  return a.q < b.q;
}

struct BranchStats {
  uint64_t nodes = 0;
  uint64_t leaves = 0;
  uint64_t hole_cover_fanout = 0;
};

struct SolveOptions {
  int threads = 1;
  bool prune = false;  // opt-in branch-and-bound; may change equal-size tie winners
  std::function<void(const Graph&)> on_reduced;  // validation hook, reduced instances
};

inline bool verify_solution(const Graph& g, const Bitset& q) {
  return is_interval(delete_vertices(g, q)).has_value();
}

namespace detail {

struct SolveCtx {
  SolveCtx(const SolveOptions& options, int n) : opts(options), root_n(n) {}
  const SolveOptions& opts;
  int root_n;
  std::atomic<uint64_t> nodes{0};
  std::atomic<uint64_t> leaves{0};
  std::atomic<uint64_t> fanout{0};
  std::mutex hook_mutex;
};

inline Solution solve_rec(const Graph& g, int k, SolveCtx& ctx, int case2_count, int depth);

// Minimum over "delete D, pay |D|, recurse" branches. Candidates whose cost
// exceeds the budget are NO without recursing.
inline Solution best_deletion_branch(const Graph& g, int k, const std::vector<Bitset>& cands,
                                     SolveCtx& ctx, int case2_count, int depth) {
  struct Task {
    Bitset del;
    int cost;
  };
  std::vector<Task> tasks;
  for (const Bitset& del : cands) {
    int cost = del.count();
    if (cost <= k) tasks.push_back({del, cost});
  }
  if (tasks.empty()) {
    ++ctx.leaves;
    return Solution::no();
  }

  auto eval = [&](const Task& t, int budget) -> Solution {
    Graph child = delete_vertices(g, t.del);
    Solution s = solve_rec(child, budget, ctx, case2_count, depth + 1);
    if (s.is_no) return Solution::no();
    std::vector<int> q = t.del.to_vector();
    for (int v : s.q) q.push_back(child.parent_id(v));
    return Solution::of(std::move(q));
  };

  Solution best = Solution::no();
  bool parallel = ctx.opts.threads > 1 && !ctx.opts.prune && depth < 2 && tasks.size() > 1;
  if (parallel) {
    std::vector<Solution> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
        results[i] = eval(tasks[i], k - tasks[i].cost);
    };
    std::vector<std::future<void>> futures;
    int nw = std::min<int>(ctx.opts.threads, int(tasks.size()));
    for (int i = 0; i < nw; ++i) futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
    for (const Solution& s : results)
      if (better_solution(s, best)) best = s;
    return best;
  }

  for (const Task& t : tasks) {
    int budget = k - t.cost;
    if (ctx.opts.prune && !best.is_no) budget = std::min(budget, best.size() - 1 - t.cost);
    if (budget < 0) continue;  // prune: cannot beat the incumbent
    Solution s = eval(t, budget);
    if (better_solution(s, best)) best = s;
  }
  return best;
}

inline Solution solve_rec(const Graph& g, int k, SolveCtx& ctx, int case2_count, int depth) {
  ++ctx.nodes;
  if (k < 0) {
    ++ctx.leaves;
    return Solution::no();
  }
  if (is_interval(g).has_value()) {
    ++ctx.leaves;
    return Solution::of({});
  }
  if (k == 0) {
    ++ctx.leaves;
    return Solution::no();
  }

  // Deletion sets are component-additive; solve components against the
  // shared budget.
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    int remaining = k;
    std::vector<int> acc;
    for (const Bitset& comp : comps) {
      Graph sub = induced_subgraph(g, comp);
      Solution s = solve_rec(sub, remaining, ctx, case2_count, depth + 1);
      if (s.is_no) return Solution::no();
      for (int v : s.q) acc.push_back(sub.parent_id(v));
      remaining -= int(s.q.size());
    }
    return Solution::of(std::move(acc));
  }

  // destroy small forbidden sets by branching
  if (auto x = find_small_forbidden_set(g)) {
    std::vector<Bitset> cands;
    INTDEL_FOR_SET(v, *x) {
      Bitset d(g.n());
      d.set(v);
      cands.push_back(d);
    }
    return best_deletion_branch(g, k, cands, ctx, case2_count, depth);
  }

  // reduce nontrivial non-clique modules
  if (auto m = find_nonclique_module(g)) {
    Instance inst{g, k, Origin::Root};
    ModuleCase mc = classify_module_case(inst, *m);
    CaseApplication app = apply_case(inst, mc);
    if (mc.which == 1) {
      const Instance& child = app.children[0];
      Solution s = solve_rec(child.graph, child.k, ctx, case2_count, depth + 1);
      if (s.is_no) return s;
      std::vector<int> q;
      for (int v : s.q) q.push_back(child.graph.parent_id(v));
      return Solution::of(std::move(q));
    }
    if (mc.which == 2) {
      ensure(case2_count + 1 <= ctx.root_n * ctx.root_n, "case-2 application ceiling hit");
      // same vertex ids; the completed graph's minimal forbidden sets match g's
      return solve_rec(app.children[0].graph, k, ctx, case2_count + 1, depth + 1);
    }

    // case 3: Q1 ∪ M against Q2 ∪ Q3, with NO propagation
    const Instance& i1 = app.children[0];
    const Instance& i2 = app.children[1];
    const Instance& i3 = app.children[2];

    Solution cand1 = Solution::no();
    if (i1.k >= 0) {
      Solution q1 = solve_rec(i1.graph, i1.k, ctx, case2_count, depth + 1);
      if (!q1.is_no) {
        std::vector<int> q = mc.m.to_vector();
        for (int v : q1.q) q.push_back(i1.graph.parent_id(v));
        cand1 = Solution::of(std::move(q));
      }
    }

    Solution cand23 = Solution::no();
    Solution q2 = solve_rec(i2.graph, i2.k, ctx, case2_count, depth + 1);
    if (!q2.is_no) {
      Solution q3 = solve_rec(i3.graph, i3.k, ctx, case2_count, depth + 1);
      if (!q3.is_no) {
        std::vector<int> q;
        for (int v : q2.q) q.push_back(i2.graph.parent_id(v));
        for (int v : q3.q) {
          int pv = i3.graph.parent_id(v);
          ensure(pv >= 0, "case-3 child solution touched the synthetic clique M'");
          q.push_back(pv);
        }
        if (int(q.size()) <= k) cand23 = Solution::of(std::move(q));
      }
    }
    return better_solution(cand1, cand23) ? cand1 : cand23;
  }

  // The instance is reduced here.
  if (ctx.opts.on_reduced) {
    std::lock_guard<std::mutex> lock(ctx.hook_mutex);
    ctx.opts.on_reduced(g);
  }

  // break all holes at once via the minimal hole covers of G0
  if (!is_chordal(g).chordal) {
    HoleUnionSubgraph hu = build_hole_union(g);
    std::vector<Bitset> cands;
    for (const Bitset& cover : enumerate_minimal_hole_covers(hu)) {
      Bitset in_g(g.n());
      INTDEL_FOR_SET(u, cover) in_g.set(hu.g0.parent_id(u));
      cands.push_back(in_g);
    }
    ctx.fanout += cands.size();
    return best_deletion_branch(g, k, cands, ctx, case2_count, depth);
  }

  // the graph is nice and chordal: branch on the canonical ten deletions
  CaterpillarDecomposition cat = build_caterpillar(g);
  AsteroidalWitness w = find_branching_aw(g, cat);
  BranchSet bs = branch_set(g, cat, w);
  std::vector<Bitset> cands;
  for (int v : bs.vb) {
    Bitset d(g.n());
    d.set(v);
    cands.push_back(d);
  }
  cands.push_back(bs.x);
  return best_deletion_branch(g, k, cands, ctx, case2_count, depth);
}

}  // namespace detail

// Driver: a minimum interval deletion set of size <= k, or NO.
inline std::pair<Solution, BranchStats> solve(const Graph& g, int k,
                                              const SolveOptions& opts = {}) {
  require(k >= 0, "solve: negative budget");
  detail::SolveCtx ctx{opts, g.n()};
  Solution s = detail::solve_rec(g, k, ctx, 0, 0);
  if (!s.is_no) {
    ensure(int(s.q.size()) <= k, "solution exceeds budget");
    ensure(verify_solution(g, Bitset::of(g.n(), s.q)), "solver returned a non-solution");
  }
  BranchStats stats;
  stats.nodes = ctx.nodes.load();
  stats.leaves = ctx.leaves.load();
  stats.hole_cover_fanout = ctx.fanout.load();
  return {s, stats};
}

}  // namespace intdel

#endif
