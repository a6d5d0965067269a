#ifndef INTDEL_CATERPILLAR_HPP
#define INTDEL_CATERPILLAR_HPP

#include <optional>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/obstructions.hpp"
#include "intdel/recognition.hpp"

namespace intdel {

namespace detail {

// One AW with terminals (s, l, r) whose non-terminal vertices all lie in
// gamma, if any: dagger-form first, then double-dagger, ascending ids.
inline std::optional<AsteroidalWitness> witness_in_region(const Graph& g, int s, int l,
                                                          int r, const Bitset& gamma) {
  Bitset ns = closed_neighborhood(g, s);
  Bitset cand_centers = g.neighbors(s) & gamma;
  if (cand_centers.empty()) return std::nullopt;
  Bitset base_all = gamma - ns;
  base_all.reset(l);
  base_all.reset(r);

  Bitset full = g.all_vertices();
  auto path_within = [&](const Bitset& inner_cand) {
    Bitset forbidden = full - inner_cand;
    forbidden.reset(l);
    forbidden.reset(r);
    return shortest_path_avoiding(g, l, r, forbidden);
  };

  Bitset dagger_centers = cand_centers - g.neighbors(l) - g.neighbors(r);
  INTDEL_FOR_SET(c, dagger_centers) {
    auto p = path_within(base_all & g.neighbors(c));
    if (!p) continue;
    AsteroidalWitness w;
    w.kind = AWKind::Dagger;
    w.s = s;
    w.centers = {c};
    w.l = l;
    w.r = r;
    w.base.assign(p->begin() + 1, p->end() - 1);
    return w;
  }
  INTDEL_FOR_SET(c1, cand_centers) {
    if (!g.adjacent(c1, l) || g.adjacent(c1, r)) continue;
    INTDEL_FOR_SET(c2, cand_centers) {
      if (c2 == c1 || !g.adjacent(c1, c2)) continue;
      if (!g.adjacent(c2, r) || g.adjacent(c2, l)) continue;
      auto p = path_within(base_all & g.neighbors(c1) & g.neighbors(c2));
      if (!p) continue;
      AsteroidalWitness w;
      w.kind = AWKind::DoubleDagger;
      w.s = s;
      w.centers = {c1, c2};
      w.l = l;
      w.r = r;
      w.base.assign(p->begin() + 1, p->end() - 1);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// All shallow terminals of a nice graph. An AT alone is not enough: a triple
// qualifies only when it is the terminal set of an actual witness, so each
// AT is screened by the long-detour criterion and then by a witness search.
// (An AT spanning two witnesses, e.g. two far-apart shallow terminals and a
// path end, has two long detours and is owned by no single witness.)
inline Bitset shallow_terminals(const Graph& g) {
  int n = g.n();
  Bitset st(n);
  Bitset everything = g.all_vertices();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        int triple[3] = {x, y, z};
        int lens[3];
        bool at = true;
        for (int i = 0; i < 3 && at; ++i) {
          int t = triple[i], a = triple[(i + 1) % 3], b = triple[(i + 2) % 3];
          auto p = shortest_path_avoiding(g, a, b, closed_neighborhood(g, t));
          if (!p)
            at = false;
          else
            lens[i] = int(p->size()) - 1;
        }
        if (!at) continue;
        int cand = -1, cands = 0;
        for (int i = 0; i < 3; ++i)
          if (lens[i] >= 4) {
            cand = triple[i];
            ++cands;
          }
        ensure(cands >= 1, "AT with only short detours; graph is not prereduced");
        if (cands > 1) continue;  // no single witness owns this triple
        if (st.test(cand)) continue;
        int a = cand == x ? y : x;
        int b = cand == z ? y : z;
        if (detail::witness_in_region(g, cand, a, b, everything)) st.set(cand);
      }
    }
  }
  INTDEL_FOR_SET(s, st)
  ensure(is_clique(g, g.neighbors(s)), "non-simplicial shallow terminal; graph is not nice");
  return st;
}

// Caterpillar clique tree of a connected nice graph: the clique path of
// g - ST(g) forms the central path; each shallow terminal's clique N[s]
// hangs off the smallest central clique properly containing N[s] \ ST(g).
struct CaterpillarDecomposition {
  Bitset st;
  std::vector<std::vector<int>> central;  // g coordinates
  std::vector<Bitset> central_bits;
  std::vector<std::pair<int, int>> leaves;  // (shallow terminal, attach index)
  std::vector<int> first, last;             // per g-vertex; -1 on ST members

  Bitset gamma(int p, int q) const {
    Bitset out = central_bits[p];
    for (int i = p + 1; i <= q; ++i) out |= central_bits[i];
    return out;
  }
  Bitset separator(int i) const { return central_bits[i] & central_bits[i + 1]; }
};

inline CaterpillarDecomposition build_caterpillar(const Graph& g) {
  require(is_connected(g), "build_caterpillar: disconnected input");
  CaterpillarDecomposition cat;
  cat.st = shallow_terminals(g);

  Graph rest = induced_subgraph(g, g.all_vertices() - cat.st);
  auto path = is_interval(rest);
  ensure(path.has_value(), "g - ST(g) not interval; graph is not nice");

  int n = g.n();
  cat.first.assign(n, -1);
  cat.last.assign(n, -1);
  for (int i = 0; i < path->size(); ++i) {
    Bitset bits(n);
    INTDEL_FOR_SET(u, path->clique_bits[i]) bits.set(rest.parent_id(u));
    cat.central_bits.push_back(bits);
    cat.central.push_back(bits.to_vector());
    INTDEL_FOR_SET(v, bits) {
      if (cat.first[v] < 0) cat.first[v] = i;
      cat.last[v] = i;
    }
  }
  INTDEL_FOR_SET(s, cat.st) {
    Bitset want = closed_neighborhood(g, s) - cat.st;
    int attach = -1;
    for (int i = 0; i < int(cat.central_bits.size()) && attach < 0; ++i)
      if (want.is_subset_of(cat.central_bits[i]) && want != cat.central_bits[i]) attach = i;
    ensure(attach >= 0, "no central clique properly contains a leaf; graph is not nice");
    cat.leaves.emplace_back(s, attach);
  }
  return cat;
}

namespace detail {

inline std::optional<AsteroidalWitness> feasible_witness(const Graph& g,
                                                         const CaterpillarDecomposition& cat,
                                                         int p, int q) {
  Bitset gamma = cat.gamma(p, q);
  INTDEL_FOR_SET(s, cat.st) {
    for (int l = 0; l < g.n(); ++l) {
      if (l == s || g.adjacent(l, s)) continue;
      for (int r = l + 1; r < g.n(); ++r) {
        if (r == s || g.adjacent(r, s) || g.adjacent(l, r)) continue;
        auto w = witness_in_region(g, s, l, r, gamma);
        if (w) return w;
      }
    }
  }
  return std::nullopt;
}

// Re-orient so that the base runs left to right on the central path
// (last(b_1) < first(b_d)); swaps l/r and the centers when reversed.
inline void orient_by_path(const CaterpillarDecomposition& cat, AsteroidalWitness& w) {
  int b1 = w.base.front(), bd = w.base.back();
  ensure(cat.first[b1] >= 0 && cat.first[bd] >= 0, "base vertex outside central path");
  if (cat.last[b1] < cat.first[bd]) return;
  ensure(cat.last[bd] < cat.first[b1], "base endpoints overlap on the central path");
  std::reverse(w.base.begin(), w.base.end());
  std::swap(w.l, w.r);
  std::reverse(w.centers.begin(), w.centers.end());
}

}  // namespace detail

// The AW the solver branches on: smallest first(b_d) over all AWs, leftmost
// minimal container, short base. Feasibility over windows locates the
// leftmost minimal container [p0,q0]; the base is then shortened in place.
inline AsteroidalWitness find_branching_aw(const Graph& g,
                                           const CaterpillarDecomposition& cat) {
  int m = int(cat.central.size()) - 1;
  ensure(m >= 0, "empty central path");

  std::optional<AsteroidalWitness> w;
  int q0 = -1;
  for (int q = 0; q <= m && !w; ++q) {
    w = detail::feasible_witness(g, cat, 0, q);
    if (w) q0 = q;
  }
  require(w.has_value(), "find_branching_aw: no asteroidal witness (graph is interval)");
  int p0 = 0;
  for (int p = q0; p >= 1; --p) {
    auto wp = detail::feasible_witness(g, cat, p, q0);
    if (wp) {
      w = wp;
      p0 = p;
      break;
    }
  }

  detail::orient_by_path(cat, *w);
  ensure(cat.last[w->base.front()] == p0 && cat.first[w->base.back()] == q0,
         "witness container disagrees with the feasibility window");

  // shrink to a short base inside (gamma \ N^(B)) + {l, r}
  Bitset gamma = cat.gamma(p0, q0);
  while (true) {
    Bitset base_bits = Bitset::of(g.n(), w->base);
    Bitset region = gamma - common_neighbors(g, base_bits);
    region.set(w->l);
    region.set(w->r);
    Bitset forbidden = g.all_vertices() - region;
    auto p = shortest_path_avoiding(g, w->l, w->r, forbidden);
    ensure(p.has_value(), "short-base region lost l-r connectivity");
    if (int(p->size()) - 2 >= w->d()) break;
    w->base.assign(p->begin() + 1, p->end() - 1);
    for (int b : w->base) {
      ensure(!g.adjacent(b, w->s), "short base touched the shallow terminal");
      for (int c : w->centers) ensure(g.adjacent(c, b), "short base escaped its centers");
    }
    detail::orient_by_path(cat, *w);
    ensure(cat.last[w->base.front()] == p0 && cat.first[w->base.back()] == q0,
           "short base changed the container");
  }

  auto cls = classify_witness(g, w->vertex_set(g.n()));
  ensure(cls.tag == WitnessClassification::IsAW && cls.aw->kind == w->kind,
         "branching witness failed classification");
  return *w;
}

// The <= 9 single-deletion candidates plus the separator remainder X;
// some minimum deletion set hits one of them.
struct BranchSet {
  std::vector<int> vb;
  Bitset x;
  int ell = -1;
};

inline BranchSet branch_set(const Graph& g, const CaterpillarDecomposition& cat,
                            const AsteroidalWitness& w) {
  int d = w.d();
  ensure(d >= 4, "branch_set: base too short for a prereduced graph");
  BranchSet bs;
  Bitset vb(g.n());
  vb.set(w.s);
  for (int c : w.centers) vb.set(c);
  vb.set(w.l);
  vb.set(w.r);
  vb.set(w.base[0]);
  vb.set(w.base[d - 3]);
  vb.set(w.base[d - 2]);
  vb.set(w.base[d - 1]);
  bs.vb = vb.to_vector();
  ensure(int(bs.vb.size()) <= 9, "branch set larger than 9 vertices");

  int lo = cat.last[w.base[0]];
  int hi = cat.first[w.base[d - 3]];
  ensure(lo < hi, "empty separator index range; base shorter than prereduced minimum");
  int ell = lo;
  int best = cat.separator(lo).count();
  for (int i = lo + 1; i < hi; ++i) {
    int c = cat.separator(i).count();
    if (c < best) {
      best = c;
      ell = i;
    }
  }
  bs.ell = ell;
  bs.x = cat.separator(ell) - common_neighbors(g, Bitset::of(g.n(), w.base));
  ensure(bs.x.any(), "separator remainder X is empty");
  return bs;
}

}  // namespace intdel

#endif
