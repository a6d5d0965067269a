#ifndef INTDEL_OBSTRUCTIONS_HPP
#define INTDEL_OBSTRUCTIONS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/holes.hpp"
#include "intdel/recognition.hpp"

namespace intdel {

enum class AWKind { LongClaw, WhippingTop, Net, Tent, Dagger, DoubleDagger };

inline const char* aw_kind_name(AWKind k) {
  switch (k) {
    case AWKind::LongClaw: return "long-claw";
    case AWKind::WhippingTop: return "whipping-top";
    case AWKind::Net: return "net";
    case AWKind::Tent: return "tent";
    case AWKind::Dagger: return "dagger";
    case AWKind::DoubleDagger: return "double-dagger";
  }
  return "?";
}

// A labeled asteroidal witness: shallow terminal s, center(s), base terminals
// l and r, base b_1..b_d ordered from l to r.
struct AsteroidalWitness {
  AWKind kind;
  int s = -1;
  std::vector<int> centers;
  int l = -1, r = -1;
  VertexSequence base;

  std::vector<int> vertices() const {
    std::vector<int> out{s, l, r};
    out.insert(out.end(), centers.begin(), centers.end());
    out.insert(out.end(), base.begin(), base.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  Bitset vertex_set(int n) const { return Bitset::of(n, vertices()); }
  int d() const { return int(base.size()); }
};

struct WitnessClassification {
  enum Tag { NotMinimal, IsHole, IsAW } tag = NotMinimal;
  std::optional<Hole> hole;
  std::optional<AsteroidalWitness> aw;
};

namespace detail {

// Exact shape adjacency for the stated kind: the witness vertices must
// induce these edges and no others.
inline bool aw_pattern_holds(const Graph& g, const AsteroidalWitness& w) {
  std::vector<int> verts = w.vertices();
  std::set<std::pair<int, int>> expected;
  auto edge = [&](int a, int b) {
    expected.insert({std::min(a, b), std::max(a, b)});
  };
  int d = w.d();
  edge(w.l, w.base[0]);
  for (int i = 0; i + 1 < d; ++i) edge(w.base[i], w.base[i + 1]);
  edge(w.base[d - 1], w.r);
  switch (w.kind) {
    case AWKind::Net:
    case AWKind::Dagger:
      if (w.centers.size() != 1) return false;
      if (w.kind == AWKind::Net ? d != 2 : d < 3) return false;
      edge(w.s, w.centers[0]);
      for (int b : w.base) edge(w.centers[0], b);
      break;
    case AWKind::WhippingTop: {
      // base = (b_1, apex, b_d); the center is the middle of the dominated
      // path and the apex sees both base terminals
      if (w.centers.size() != 1 || d != 3) return false;
      int c = w.centers[0], apex = w.base[1];
      edge(w.s, c);
      edge(c, w.base[0]);
      edge(c, w.base[2]);
      edge(c, apex);
      edge(apex, w.l);
      edge(apex, w.r);
      break;
    }
    case AWKind::LongClaw:
      if (w.centers.size() != 1 || d != 3) return false;
      edge(w.s, w.centers[0]);
      edge(w.centers[0], w.base[1]);
      break;
    case AWKind::Tent:
    case AWKind::DoubleDagger: {
      if (w.centers.size() != 2) return false;
      if (w.kind == AWKind::Tent ? d != 1 : d < 2) return false;
      int c1 = w.centers[0], c2 = w.centers[1];
      edge(w.s, c1);
      edge(w.s, c2);
      edge(c1, c2);
      edge(c1, w.l);
      edge(c2, w.r);
      for (int b : w.base) {
        edge(c1, b);
        edge(c2, b);
      }
      break;
    }
  }
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      bool want = expected.count({verts[i], verts[j]}) > 0;
      if (g.adjacent(verts[i], verts[j]) != want) return false;
    }
  return true;
}

// The vertices of `sub` within g, as an ordered path, when they induce one.
inline std::optional<VertexSequence> induced_path_order(const Graph& g,
                                                        const Bitset& sub) {
  std::vector<int> verts = sub.to_vector();
  if (verts.empty()) return std::nullopt;
  if (verts.size() == 1) return VertexSequence{verts[0]};
  std::vector<int> ends;
  int edge_count = 0;
  for (int v : verts) {
    int deg = g.neighbors(v).intersection_count(sub);
    if (deg > 2) return std::nullopt;
    if (deg <= 1) ends.push_back(v);
    edge_count += deg;
  }
  edge_count /= 2;
  if (ends.size() != 2 || edge_count != int(verts.size()) - 1) return std::nullopt;
  VertexSequence path{std::min(ends[0], ends[1])};
  Bitset used(g.n());
  used.set(path[0]);
  while (path.size() < verts.size()) {
    Bitset nxt = (g.neighbors(path.back()) & sub) - used;
    int u = nxt.first();
    if (u < 0) return std::nullopt;  // disconnected
    path.push_back(u);
    used.set(u);
  }
  return path;
}

}  // namespace detail

// Classify a minimal forbidden set into a hole or a labeled witness shape.
inline WitnessClassification classify_witness(const Graph& g, const Bitset& xs) {
  Graph w = induced_subgraph(g, xs);
  require(!is_interval(w).has_value(), "classify_witness: set induces an interval graph");

  WitnessClassification out;
  for (int v = 0; v < w.n(); ++v) {
    if (!is_interval(delete_vertex(w, v)).has_value()) {
      out.tag = WitnessClassification::NotMinimal;
      return out;
    }
  }
  const std::vector<int>& back = w.parent_ids();

  bool all_deg2 = true;
  for (int v = 0; v < w.n(); ++v)
    if (w.degree(v) != 2) all_deg2 = false;
  if (all_deg2) {
    VertexSequence walk{0};
    Bitset used(w.n());
    used.set(0);
    while (int(walk.size()) < w.n()) {
      Bitset nxt = w.neighbors(walk.back()) - used;
      int u = nxt.first();
      ensure(u >= 0, "degree-2 minimal witness is not a single cycle");
      walk.push_back(u);
      used.set(u);
    }
    ensure(w.adjacent(walk.back(), walk.front()), "cycle walk did not close");
    out.tag = WitnessClassification::IsHole;
    out.hole = Hole{canonical_cycle(map_through(walk, back))};
    return out;
  }

  // whipping top first: an apex dominating a chordless 5-path whose middle
  // carries the third terminal; its W - N[t] remainders are never paths for t
  // itself, so the generic criterion below would mislabel it
  if (w.n() == 7) {
    for (int apex = 0; apex < 7; ++apex) {
      if (w.degree(apex) != 5) continue;
      Bitset outside = w.all_vertices() - closed_neighborhood(w, apex);
      if (outside.count() != 1) continue;
      int s0 = outside.first();
      if (w.degree(s0) != 1) continue;
      int c0 = w.neighbors(s0).first();
      Bitset rest = w.all_vertices();
      rest.reset(apex);
      rest.reset(s0);
      auto p5 = detail::induced_path_order(w, rest);
      if (!p5 || p5->size() != 5 || (*p5)[2] != c0) continue;
      if (back[p5->front()] > back[p5->back()]) std::reverse(p5->begin(), p5->end());
      AsteroidalWitness aw;
      aw.kind = AWKind::WhippingTop;
      aw.s = s0;
      aw.centers = {c0};
      aw.l = p5->front();
      aw.r = p5->back();
      aw.base = {(*p5)[1], apex, (*p5)[3]};
      if (!detail::aw_pattern_holds(w, aw)) continue;
      aw.s = back[aw.s];
      aw.l = back[aw.l];
      aw.r = back[aw.r];
      for (int& c : aw.centers) c = back[c];
      for (int& b : aw.base) b = back[b];
      out.tag = WitnessClassification::IsAW;
      out.aw = aw;
      return out;
    }
  }

  std::vector<int> terminals;
  for (int v = 0; v < w.n(); ++v)
    if (is_clique(w, w.neighbors(v))) terminals.push_back(v);
  ensure(terminals.size() == 3, "minimal witness without exactly 3 simplicial vertices");
  for (int a : terminals)
    for (int b : terminals)
      ensure(a == b || !w.adjacent(a, b), "adjacent witness terminals");

  std::vector<int> s_cands;
  for (int t : terminals) {
    Bitset rest = w.all_vertices() - closed_neighborhood(w, t);
    auto path = detail::induced_path_order(w, rest);
    if (!path || path->size() < 2) continue;
    std::vector<int> others;
    for (int o : terminals)
      if (o != t) others.push_back(o);
    if ((path->front() == others[0] && path->back() == others[1]) ||
        (path->front() == others[1] && path->back() == others[0]))
      s_cands.push_back(t);
  }
  ensure(!s_cands.empty(), "witness has no shallow terminal");
  int s = *std::min_element(s_cands.begin(), s_cands.end(),
                            [&](int a, int b) { return back[a] < back[b]; });

  std::vector<int> rest_terms;
  for (int t : terminals)
    if (t != s) rest_terms.push_back(t);
  int l = rest_terms[0], r = rest_terms[1];
  if (back[l] > back[r]) std::swap(l, r);

  auto path = *detail::induced_path_order(w, w.all_vertices() - closed_neighborhood(w, s));
  if (path.front() != l) std::reverse(path.begin(), path.end());
  VertexSequence base(path.begin() + 1, path.end() - 1);
  std::vector<int> centers = (w.neighbors(s)).to_vector();
  int d = int(base.size());

  AsteroidalWitness aw;
  aw.s = s;
  aw.l = l;
  aw.r = r;
  aw.base = base;
  aw.centers = centers;
  if (centers.size() == 1) {
    int c = centers[0];
    int cnt = 0;
    for (int b : base)
      if (w.adjacent(c, b)) ++cnt;
    if (cnt == d && d == 2)
      aw.kind = AWKind::Net;
    else if (cnt == d && d >= 3)
      aw.kind = AWKind::Dagger;
    else if (cnt == 1 && d == 3 && w.adjacent(c, base[1]))
      aw.kind = AWKind::LongClaw;
    else
      throw InvariantError("minimal witness matches no single-center shape");
  } else {
    ensure(centers.size() == 2, "shallow terminal with more than two centers");
    if (!w.adjacent(centers[0], l)) std::swap(aw.centers[0], aw.centers[1]);
    aw.kind = d == 1 ? AWKind::Tent : AWKind::DoubleDagger;
  }
  ensure(detail::aw_pattern_holds(w, aw), "witness failed its shape pattern check");

  aw.s = back[aw.s];
  aw.l = back[aw.l];
  aw.r = back[aw.r];
  for (int& c : aw.centers) c = back[c];
  for (int& b : aw.base) b = back[b];
  out.tag = WitnessClassification::IsAW;
  out.aw = aw;
  return out;
}

namespace detail {

// Chordless path (l, x_1..x_d, r) with inner vertices drawn from inner_cand;
// first hit in ascending DFS order.
inline bool chordless_path_dfs(const Graph& g, int l, int r, const Bitset& inner_cand,
                               int d, VertexSequence& inner, Bitset forbidden) {
  int depth = int(inner.size());
  int prev = depth == 0 ? l : inner.back();
  Bitset next = g.neighbors(prev) & inner_cand;
  next -= forbidden;
  if (depth + 1 == d)
    next &= g.neighbors(r);
  else
    next -= g.neighbors(r);
  INTDEL_FOR_SET(x, next) {
    inner.push_back(x);
    if (depth + 1 == d) return true;
    Bitset f2 = forbidden | g.neighbors(prev);
    f2.set(prev);
    f2.set(x);
    if (chordless_path_dfs(g, l, r, inner_cand, d, inner, f2)) return true;
    inner.pop_back();
  }
  return false;
}

inline std::optional<VertexSequence> bounded_chordless_path(const Graph& g, int l, int r,
                                                            const Bitset& inner_cand,
                                                            int d) {
  if (d <= 0) return std::nullopt;
  VertexSequence inner;
  Bitset forbidden(g.n());
  forbidden.set(l);
  forbidden.set(r);
  if (chordless_path_dfs(g, l, r, inner_cand, d, inner, forbidden)) return inner;
  return std::nullopt;
}

inline std::optional<Bitset> search_dagger_family(const Graph& g, int d) {
  int n = g.n();
  for (int s = 0; s < n; ++s) {
    Bitset ns = closed_neighborhood(g, s);
    INTDEL_FOR_SET(c, g.neighbors(s)) {
      Bitset base_cand = g.neighbors(c) - ns;
      if (base_cand.count() < d) continue;
      Bitset end_cand = g.all_vertices() - closed_neighborhood(g, c) - ns;
      INTDEL_FOR_SET(l, end_cand) {
        if (!g.neighbors(l).intersects(base_cand)) continue;
        INTDEL_FOR_SET(r, end_cand) {
          if (r <= l || g.adjacent(l, r)) continue;
          if (!g.neighbors(r).intersects(base_cand)) continue;
          auto inner = bounded_chordless_path(g, l, r, base_cand, d);
          if (!inner) continue;
          Bitset out = Bitset::of(n, {s, c, l, r});
          for (int b : *inner) out.set(b);
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Bitset> search_double_dagger_family(const Graph& g, int d) {
  int n = g.n();
  for (int s = 0; s < n; ++s) {
    Bitset ns = closed_neighborhood(g, s);
    INTDEL_FOR_SET(c1, g.neighbors(s)) {
      INTDEL_FOR_SET(c2, g.neighbors(s)) {
        if (c1 == c2 || !g.adjacent(c1, c2)) continue;
        Bitset lcand = g.neighbors(c1) - closed_neighborhood(g, c2) - ns;
        Bitset rcand = g.neighbors(c2) - closed_neighborhood(g, c1) - ns;
        if (lcand.empty() || rcand.empty()) continue;
        Bitset base_cand = (g.neighbors(c1) & g.neighbors(c2)) - ns;
        if (base_cand.count() < d) continue;
        INTDEL_FOR_SET(l, lcand) {
          INTDEL_FOR_SET(r, rcand) {
            if (r == l || g.adjacent(l, r)) continue;
            auto inner = bounded_chordless_path(g, l, r, base_cand, d);
            if (!inner) continue;
            Bitset out = Bitset::of(n, {s, c1, c2, l, r});
            for (int b : *inner) out.set(b);
            return out;
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Bitset> search_long_claw(const Graph& g) {
  int n = g.n();
  for (int h = 0; h < n; ++h) {
    std::vector<int> nbrs = g.neighbors(h).to_vector();
    if (int(nbrs.size()) < 3) continue;
    Bitset nh = closed_neighborhood(g, h);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        for (size_t k = j + 1; k < nbrs.size(); ++k) {
          int m1 = nbrs[i], m2 = nbrs[j], m3 = nbrs[k];
          if (g.adjacent(m1, m3) || g.adjacent(m2, m3)) continue;
          Bitset t1c = g.neighbors(m1) - nh - closed_neighborhood(g, m2) -
                       closed_neighborhood(g, m3);
          INTDEL_FOR_SET(t1, t1c) {
            Bitset t2c = (g.neighbors(m2) - nh - closed_neighborhood(g, m1) -
                          closed_neighborhood(g, m3)) -
                         closed_neighborhood(g, t1);
            INTDEL_FOR_SET(t2, t2c) {
              Bitset t3c = (g.neighbors(m3) - nh - closed_neighborhood(g, m1) -
                            closed_neighborhood(g, m2)) -
                           closed_neighborhood(g, t1) - closed_neighborhood(g, t2);
              int t3 = t3c.first();
              if (t3 >= 0) return Bitset::of(n, {h, m1, m2, m3, t1, t2, t3});
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Bitset> search_whipping_top(const Graph& g) {
  int n = g.n();
  for (int apex = 0; apex < n; ++apex) {
    Bitset cand = g.neighbors(apex);
    if (cand.count() < 5) continue;
    INTDEL_FOR_SET(l, cand) {
      INTDEL_FOR_SET(r, cand) {
        if (r <= l || g.adjacent(l, r)) continue;
        auto inner = bounded_chordless_path(g, l, r, cand, 3);
        if (!inner) continue;
        int mid = (*inner)[1];
        Bitset scand = g.neighbors(mid) - closed_neighborhood(g, apex) -
                       closed_neighborhood(g, l) - closed_neighborhood(g, r) -
                       closed_neighborhood(g, (*inner)[0]) -
                       closed_neighborhood(g, (*inner)[2]);
        int s = scand.first();
        if (s < 0) continue;
        Bitset out = Bitset::of(n, {s, apex, l, r});
        for (int b : *inner) out.set(b);
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// A minimal forbidden set on <= 10 vertices, or absent
// (which certifies the graph prereduced: every hole and AW has >= 11
// vertices). Holes first, then AW shapes by size then kind.
inline std::optional<Bitset> find_small_forbidden_set(const Graph& g) {
  if (!is_chordal(g).chordal) {
    auto hole = detail::shortest_hole_capped(g, 10);
    if (hole) return Bitset::of(g.n(), hole->cycle);
  }

  for (int size = 6; size <= 10; ++size) {
    std::optional<Bitset> found;
    switch (size) {
      case 6:
        found = detail::search_dagger_family(g, 2);  // net
        if (!found) found = detail::search_double_dagger_family(g, 1);  // tent
        break;
      case 7:
        found = detail::search_long_claw(g);
        if (!found) found = detail::search_whipping_top(g);
        if (!found) found = detail::search_dagger_family(g, 3);
        if (!found) found = detail::search_double_dagger_family(g, 2);
        break;
      default:
        found = detail::search_dagger_family(g, size - 4);
        if (!found) found = detail::search_double_dagger_family(g, size - 5);
        break;
    }
    if (found) return found;
  }
  return std::nullopt;
}

inline bool is_at_triple(const Graph& g, int x, int y, int z) {
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(z);
  require(x != y && y != z && x != z, "is_at_triple: vertices not distinct");
  if (g.adjacent(x, y) || g.adjacent(y, z) || g.adjacent(x, z)) return false;
  auto connected_avoiding = [&](int a, int b, int t) {
    auto p = shortest_path_avoiding(g, a, b, closed_neighborhood(g, t));
    return p.has_value();
  };
  return connected_avoiding(y, z, x) && connected_avoiding(x, z, y) &&
         connected_avoiding(x, y, z);
}

// In a nice graph, the member t of an AT whose removal (with its neighbors)
// leaves the other two far apart: shortest path length >= 4 in g - N[t].
inline int shallow_terminal_of_triple(const Graph& g, int x, int y, int z) {
  require(is_at_triple(g, x, y, z), "shallow_terminal_of_triple: not an AT");
  int triple[3] = {x, y, z};
  std::vector<int> cands;
  for (int i = 0; i < 3; ++i) {
    int t = triple[i], a = triple[(i + 1) % 3], b = triple[(i + 2) % 3];
    auto p = shortest_path_avoiding(g, a, b, closed_neighborhood(g, t));
    if (p && int(p->size()) - 1 >= 4) cands.push_back(t);
  }
  ensure(cands.size() == 1,
         "shallow terminal criterion held for " + std::to_string(cands.size()) +
             " members; graph is not nice");
  return cands[0];
}

}  // namespace intdel

#endif
