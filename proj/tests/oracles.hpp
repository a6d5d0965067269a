#ifndef INTDEL_TESTS_ORACLES_HPP
#define INTDEL_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <set>

#include "intdel/intdel.hpp"

// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's algorithmic paths they cross-check.
namespace oracles {

using intdel::Bitset;
using intdel::Graph;

// Chordality by exhaustive induced-cycle search (n small): a chordless cycle
// of length >= 4 exists iff some vertex subset induces a connected 2-regular
// graph of size >= 4.
inline bool has_hole_brute(const Graph& g) {
  int n = g.n();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    Bitset sub(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) sub.set(v);
    bool deg2 = true;
    INTDEL_FOR_SET(v, sub) {
      if (g.neighbors(v).intersection_count(sub) != 2) {
        deg2 = false;
        break;
      }
    }
    if (!deg2) continue;
    int a = sub.first();
    if (intdel::is_connected_within(g, sub, a, sub.next(a + 1)) &&
        [&] {
          bool all = true;
          INTDEL_FOR_SET(v, sub) all = all && intdel::is_connected_within(g, sub, a, v);
          return all;
        }())
      return true;
  }
  return false;
}

// All subsets of size <= cap that are minimal hole covers of g.
inline std::set<std::vector<int>> minimal_hole_covers_brute(const Graph& g, int cap) {
  std::set<std::vector<int>> out;
  int n = g.n();
  std::vector<int> pick;
  auto is_cover = [&](const Bitset& del) {
    return intdel::is_chordal(intdel::delete_vertices(g, del)).chordal;
  };
  std::function<void(int)> rec = [&](int from) {
    if (!pick.empty()) {
      Bitset del = Bitset::of(n, pick);
      if (is_cover(del)) {
        bool minimal = true;
        for (int v : pick) {
          Bitset smaller = del;
          smaller.reset(v);
          if (is_cover(smaller)) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.insert(pick);
        return;  // supersets of a cover are never minimal
      }
    }
    if (int(pick.size()) == cap) return;
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Maximal cliques by Bron-Kerbosch (no pivoting; test scale only).
inline std::vector<std::vector<int>> maximal_cliques_brute(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::function<void(Bitset, Bitset, Bitset)> bk = [&](Bitset r, Bitset p, Bitset x) {
    if (p.empty() && x.empty()) {
      out.push_back(r.to_vector());
      return;
    }
    Bitset pc = p;
    INTDEL_FOR_SET(v, pc) {
      Bitset r2 = r;
      r2.set(v);
      bk(r2, p & g.neighbors(v), x & g.neighbors(v));
      p.reset(v);
      x.set(v);
    }
  };
  bk(Bitset(g.n()), g.all_vertices(), Bitset(g.n()));
  std::sort(out.begin(), out.end());
  return out;
}

// Does any subset of size <= cap induce a non-interval subgraph?
inline bool has_small_noninterval_subset(const Graph& g, int cap) {
  int n = g.n();
  std::vector<int> pick;
  bool found = false;
  std::function<void(int)> rec = [&](int from) {
    if (found) return;
    if (int(pick.size()) >= 4 &&
        !intdel::is_interval(intdel::induced_subgraph(g, Bitset::of(n, pick))).has_value()) {
      found = true;
      return;
    }
    if (int(pick.size()) == cap) return;
    for (int v = from; v < n && !found; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return found;
}

// Connected-graph enumeration on n vertices up to nothing (raw: all labeled
// graphs, filtered to connected); used for the exhaustive n<=6 sweep.
template <typename F>
void for_each_connected_graph(int n, F&& visit) {
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    Graph g(n);
    for (int b = 0; b < pairs; ++b)
      if (mask & (1ull << b)) g.add_edge_internal(idx[b].first, idx[b].second);
    if (intdel::is_connected(g)) visit(g);
  }
}

}  // namespace oracles

#endif
