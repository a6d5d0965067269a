#ifndef INTDEL_HOLE_COVER_HPP
#define INTDEL_HOLE_COVER_HPP

#include <set>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/holes.hpp"
#include "intdel/recognition.hpp"

namespace intdel {

// The subgraph induced by the union of all holes of a reduced graph, with one
// witness hole per vertex. g0.parent_ids() maps back into the source graph.
struct HoleUnionSubgraph {
  Graph g0;
  std::vector<Hole> witness_map;  // g0 coordinates
};

inline HoleUnionSubgraph build_hole_union(const Graph& g) {
  require(!is_chordal(g).chordal, "build_hole_union: chordal input");
  Bitset members(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (vertex_on_hole(g, v)) members.set(v);

  HoleUnionSubgraph hu;
  hu.g0 = induced_subgraph(g, members);
  for (int v = 0; v < hu.g0.n(); ++v) {
    auto h = shortest_hole_through(hu.g0, v);
    ensure(h.has_value(), "hole-union vertex lost its hole");
    ensure(!is_clique(hu.g0, hu.g0.neighbors(v)), "simplicial vertex in hole union");
    hu.witness_map.push_back(*h);
  }
  return hu;
}

inline bool is_hole_cover(const HoleUnionSubgraph& hu, const Bitset& xs) {
  return is_chordal(delete_vertices(hu.g0, xs)).chordal;
}

// Enumeration: for each vertex v of one shortest hole, the
// minimal separators of g0 - N[v] that are nonadjacent to N[v] are exactly
// the minimal hole covers discoverable at v; the union over v is complete.
// Every candidate is re-verified; count is asserted <= n^2.
inline std::vector<Bitset> enumerate_minimal_hole_covers(const HoleUnionSubgraph& hu) {
  const Graph& g0 = hu.g0;
  int n = g0.n();
  auto sh = shortest_hole(g0);
  ensure(sh.has_value(), "hole union without a hole");

  std::set<std::vector<int>> covers;
  std::vector<int> anchor = sh->cycle;
  std::sort(anchor.begin(), anchor.end());
  for (int v : anchor) {
    Bitset nv = closed_neighborhood(g0, v);
    Graph rest = induced_subgraph(g0, g0.all_vertices() - nv);
    ensure(is_interval(rest).has_value(),
           "g0 - N[v] not interval; upstream graph was not reduced");
    for (const Bitset& sep_local : minimal_separators_interval(rest)) {
      Bitset sep(n);
      INTDEL_FOR_SET(u, sep_local) sep.set(rest.parent_id(u));

      bool touches_nv = false;
      INTDEL_FOR_SET(u, sep) {
        if (g0.neighbors(u).intersects(nv)) {
          touches_nv = true;
          break;
        }
      }
      if (touches_nv) continue;

      ensure(is_clique(g0, sep), "hole-cover candidate is not a clique");
      ensure(is_hole_cover(hu, sep), "separator candidate is not a hole cover");
      INTDEL_FOR_SET(drop, sep) {
        Bitset smaller = sep;
        smaller.reset(drop);
        ensure(!is_hole_cover(hu, smaller), "hole-cover candidate not minimal");
      }
      covers.insert(sep.to_vector());
    }
  }
  ensure(!covers.empty(), "no minimal hole cover found for a non-chordal graph");
  ensure(int64_t(covers.size()) <= int64_t(n) * n, "minimal hole cover count exceeds n^2");

  std::vector<Bitset> out;
  for (const auto& ids : covers) out.push_back(Bitset::of(n, ids));
  return out;
}

}  // namespace intdel

#endif
