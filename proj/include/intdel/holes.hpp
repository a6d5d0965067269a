#ifndef INTDEL_HOLES_HPP
#define INTDEL_HOLES_HPP

#include <optional>
#include <vector>

#include "intdel/graph.hpp"

namespace intdel {

// Chordless cycle of length >= 4, stored in canonical traversal order:
// smallest vertex first, lexicographically smaller direction.
struct Hole {
  VertexSequence cycle;
  int length() const { return int(cycle.size()); }
};

inline VertexSequence canonical_cycle(const VertexSequence& cyc) {
  int n = int(cyc.size());
  int at = int(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  VertexSequence fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = cyc[(at + i) % n];
    bwd[i] = cyc[(at - i + n) % n];
  }
  return fwd <= bwd ? fwd : bwd;
}

namespace detail {

// BFS with a hop cap; ties resolved by ascending-id scan order.
inline std::optional<VertexSequence> bounded_path_avoiding(const Graph& g, int a, int b,
                                                           const Bitset& forbidden,
                                                           int max_edges) {
  if (a == b) return VertexSequence{a};
  Bitset allowed = g.all_vertices() - forbidden;
  std::vector<int> parent(g.n(), -1);
  Bitset seen(g.n());
  seen.set(a);
  std::vector<int> frontier{a};
  for (int depth = 1; depth <= max_edges && !frontier.empty(); ++depth) {
    std::vector<int> next;
    for (int v : frontier) {
      Bitset fresh = (g.neighbors(v) & allowed) - seen;
      INTDEL_FOR_SET(u, fresh) {
        parent[u] = v;
        if (u == b) {
          VertexSequence path;
          for (int w = b; w != -1; w = parent[w]) path.push_back(w);
          std::reverse(path.begin(), path.end());
          return path;
        }
        seen.set(u);
        next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Candidate holes rooted at v: close a shortest a-b path avoiding
// N[v] \ {a,b} through v. Every such cycle is a hole, and every hole through
// v arises this way from its two cycle-neighbors. Cycles longer than
// max_cycle_len are not reported; the bound is re-read so callers can shrink
// it as better candidates appear.
template <typename F>
void for_each_rooted_hole(const Graph& g, int v, const int& max_cycle_len, F&& visit) {
  std::vector<int> nbrs = g.neighbors(v).to_vector();
  for (size_t i = 0; i < nbrs.size(); ++i) {
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      int a = nbrs[i], b = nbrs[j];
      if (g.adjacent(a, b)) continue;
      Bitset forbidden = closed_neighborhood(g, v);
      forbidden.reset(a);
      forbidden.reset(b);
      auto path = bounded_path_avoiding(g, a, b, forbidden, max_cycle_len - 2);
      if (!path) continue;
      VertexSequence cyc{v};
      cyc.insert(cyc.end(), path->begin(), path->end());
      if (visit(cyc)) return;
    }
  }
}

inline std::optional<Hole> shortest_hole_capped(const Graph& g, int cap) {
  std::optional<VertexSequence> best;
  int bound = cap;
  for (int v = 0; v < g.n(); ++v) {
    detail::for_each_rooted_hole(g, v, bound, [&](const VertexSequence& cyc) {
      VertexSequence canon = canonical_cycle(cyc);
      if (!best || cyc.size() < best->size() ||
          (cyc.size() == best->size() && canon < *best))
        best = canon;
      bound = int(best->size());
      return best->size() == 4;
    });
    if (best && best->size() == 4) break;
  }
  if (!best) return std::nullopt;
  return Hole{*best};
}

}  // namespace detail

inline std::optional<Hole> shortest_hole_through(const Graph& g, int v) {
  std::optional<VertexSequence> best;
  int bound = g.n() + 1;
  detail::for_each_rooted_hole(g, v, bound, [&](const VertexSequence& cyc) {
    VertexSequence canon = canonical_cycle(cyc);
    if (!best || cyc.size() < best->size() ||
        (cyc.size() == best->size() && canon < *best))
      best = canon;
    bound = int(best->size());
    return best->size() == 4;
  });
  if (!best) return std::nullopt;
  return Hole{*best};
}

inline std::optional<Hole> shortest_hole(const Graph& g) {
  return detail::shortest_hole_capped(g, g.n() + 1);
}

inline bool vertex_on_hole(const Graph& g, int v) {
  bool found = false;
  detail::for_each_rooted_hole(g, v, g.n() + 1, [&](const VertexSequence&) {
    found = true;
    return true;
  });
  return found;
}

}  // namespace intdel

#endif
