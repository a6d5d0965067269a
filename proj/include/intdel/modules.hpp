#ifndef INTDEL_MODULES_HPP
#define INTDEL_MODULES_HPP

#include <optional>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/recognition.hpp"

namespace intdel {

enum class Origin { Root, Case3I1, Case3I2, Case3I3, VertexDeleted, HoleCoverDeleted };

// A (graph, budget) pair in the branching tree. Child graphs carry
// parent_ids into their parent instance's graph; synthetic vertices
// (the case-3 clique M') map to -1 and must never appear in a solution.
struct Instance {
  Graph graph;
  int k = 0;
  Origin origin = Origin::Root;
};

inline bool is_module(const Graph& g, const Bitset& m) {
  int u0 = m.first();
  if (u0 < 0) return true;
  Bitset outside0 = g.neighbors(u0) - m;
  INTDEL_FOR_SET(u, m) {
    if ((g.neighbors(u) - m) != outside0) return false;
  }
  return true;
}

// Find-Module: grow from each nonadjacent pair, absorbing splitters
// until none remain. Returns the inclusion-minimal nontrivial module around
// the first pair that works; absent when every nontrivial module is a clique.
inline std::optional<Bitset> find_nonclique_module(const Graph& g) {
  int n = g.n();
  Bitset all = g.all_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Bitset m(n);
      m.set(u);
      m.set(v);
      while (true) {
        if (m == all) break;
        Bitset splitters(n);
        int msize = m.count();
        Bitset outside = all - m;
        INTDEL_FOR_SET(x, outside) {
          int c = g.neighbors(x).intersection_count(m);
          if (c > 0 && c < msize) splitters.set(x);
        }
        if (splitters.empty()) return m;
        m |= splitters;
      }
    }
  }
  return std::nullopt;
}

struct ModuleCase {
  int which = 0;  // 1, 2, 3
  Bitset m;
};

// The two recognition tests deciding which case applies, in order.
// Requires a prereduced graph
// (4-hole-free in particular) and a nontrivial non-clique module.
inline ModuleCase classify_module_case(const Instance& inst, const Bitset& m) {
  const Graph& g = inst.graph;
  require(m.count() >= 2 && m.count() < g.n(), "classify_module_case: module not nontrivial");
  require(!is_clique(g, m), "classify_module_case: module induces a clique");

  ModuleCase mc;
  mc.m = m;
  Bitset drop = m;
  drop.reset(m.first());
  if (is_interval(delete_vertices(g, drop)).has_value()) {
    mc.which = 1;
  } else if (is_interval(induced_subgraph(g, m)).has_value()) {
    mc.which = 2;
  } else {
    mc.which = 3;
  }
  return mc;
}

inline Graph complete_into_clique(const Graph& g, const Bitset& m) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    Bitset nb = g.neighbors(u);
    INTDEL_FOR_SET(v, nb) {
      if (v > u) h.add_edge_internal(u, v);
    }
  }
  std::vector<int> mv = m.to_vector();
  for (size_t i = 0; i < mv.size(); ++i)
    for (size_t j = i + 1; j < mv.size(); ++j)
      if (!h.adjacent(mv[i], mv[j])) h.add_edge_internal(mv[i], mv[j]);
  return h;
}

// g with M replaced by a fresh (k+1)-clique M' joined to N(M). Kept vertices
// map to their ids in g; M' vertices map to -1.
inline Graph replace_module_with_clique(const Graph& g, const Bitset& m, int clique_size) {
  Bitset keep = g.all_vertices() - m;
  std::vector<int> kept = keep.to_vector();
  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = int(i);

  Bitset nm(g.n());
  INTDEL_FOR_SET(u, m) nm |= g.neighbors(u);
  nm -= m;

  int base = int(kept.size());
  Graph h(base + clique_size);
  for (size_t i = 0; i < kept.size(); ++i) {
    Bitset nb = g.neighbors(kept[i]) & keep;
    INTDEL_FOR_SET(u, nb) {
      if (new_id[u] > int(i)) h.add_edge_internal(int(i), new_id[u]);
    }
  }
  for (int a = 0; a < clique_size; ++a) {
    for (int b = a + 1; b < clique_size; ++b) h.add_edge_internal(base + a, base + b);
    INTDEL_FOR_SET(u, nm) h.add_edge_internal(base + a, new_id[u]);
  }
  std::vector<int> parents(base + clique_size, -1);
  for (size_t i = 0; i < kept.size(); ++i) parents[int(i)] = kept[i];
  h.set_parent_ids_internal(std::move(parents));
  return h;
}

// The module rule applied to one instance. Children are listed in a fixed order;
// the solver owns recombination (including the NO propagation rules).
struct CaseApplication {
  ModuleCase mcase;
  std::vector<Instance> children;
};

inline CaseApplication apply_case(const Instance& inst, const ModuleCase& mc) {
  const Graph& g = inst.graph;
  CaseApplication app;
  app.mcase = mc;
  switch (mc.which) {
    case 1:
      app.children.push_back({induced_subgraph(g, mc.m), inst.k, Origin::Root});
      break;
    case 2:
      app.children.push_back({complete_into_clique(g, mc.m), inst.k, Origin::Root});
      break;
    case 3: {
      int msize = mc.m.count();
      app.children.push_back({delete_vertices(g, mc.m), inst.k - msize, Origin::Case3I1});
      app.children.push_back({induced_subgraph(g, mc.m), inst.k - 1, Origin::Case3I2});
      app.children.push_back(
          {replace_module_with_clique(g, mc.m, inst.k + 1), inst.k - 1, Origin::Case3I3});
      break;
    }
    default:
      throw UsageError("apply_case: bad case");
  }
  return app;
}

}  // namespace intdel

#endif
