#ifndef INTDEL_TESTS_FIXTURES_HPP
#define INTDEL_TESTS_FIXTURES_HPP

#include "intdel/intdel.hpp"

namespace fixtures {

using intdel::Graph;

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge_internal(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge_internal(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge_internal(i, j);
  return g;
}

// Disjoint union; the second graph's ids are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (int u = 0; u < a.n(); ++u) {
    auto nb = a.neighbors(u);
    INTDEL_FOR_SET(v, nb) {
      if (v > u) g.add_edge_internal(u, v);
    }
  }
  for (int u = 0; u < b.n(); ++u) {
    auto nb = b.neighbors(u);
    INTDEL_FOR_SET(v, nb) {
      if (v > u) g.add_edge_internal(a.n() + u, a.n() + v);
    }
  }
  return g;
}

// dagger-AW (s:c:l,B,r), d base vertices. Layout: 0=s, 1=c, 2=l,
// 3..d+2 = b_1..b_d, d+3 = r. d=2 gives the net.
struct DaggerAW {
  Graph g;
  int s, c, l, r;
  std::vector<int> base;
};

inline DaggerAW dagger_aw(int d) {
  DaggerAW f;
  f.g = Graph(d + 4);
  f.s = 0;
  f.c = 1;
  f.l = 2;
  f.r = d + 3;
  for (int i = 0; i < d; ++i) f.base.push_back(3 + i);
  f.g.add_edge_internal(f.s, f.c);
  for (int b : f.base) f.g.add_edge_internal(f.c, b);
  f.g.add_edge_internal(f.l, f.base.front());
  for (int i = 0; i + 1 < d; ++i) f.g.add_edge_internal(f.base[i], f.base[i + 1]);
  f.g.add_edge_internal(f.base.back(), f.r);
  return f;
}

// double-dagger-AW (s:c1,c2:l,B,r). Layout: 0=s, 1=c1, 2=c2, 3=l,
// 4..d+3 = b_1..b_d, d+4 = r. d=1 gives the tent.
struct DoubleDaggerAW {
  Graph g;
  int s, c1, c2, l, r;
  std::vector<int> base;
};

inline DoubleDaggerAW double_dagger_aw(int d) {
  DoubleDaggerAW f;
  f.g = Graph(d + 5);
  f.s = 0;
  f.c1 = 1;
  f.c2 = 2;
  f.l = 3;
  f.r = d + 4;
  for (int i = 0; i < d; ++i) f.base.push_back(4 + i);
  f.g.add_edge_internal(f.s, f.c1);
  f.g.add_edge_internal(f.s, f.c2);
  f.g.add_edge_internal(f.c1, f.c2);
  f.g.add_edge_internal(f.c1, f.l);
  f.g.add_edge_internal(f.c2, f.r);
  for (int b : f.base) {
    f.g.add_edge_internal(f.c1, b);
    f.g.add_edge_internal(f.c2, b);
  }
  f.g.add_edge_internal(f.l, f.base.front());
  for (int i = 0; i + 1 < d; ++i) f.g.add_edge_internal(f.base[i], f.base[i + 1]);
  f.g.add_edge_internal(f.base.back(), f.r);
  return f;
}

inline Graph net() { return dagger_aw(2).g; }
inline Graph tent() { return double_dagger_aw(1).g; }

// spider with three legs of length 2: hub 0, mids 1..3, tips 4..6
inline Graph long_claw() {
  Graph g(7);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge_internal(0, i);
    g.add_edge_internal(i, i + 3);
  }
  return g;
}

// chordless path 2-3-4-5-6, apex 1 adjacent to all of it, 0 hanging off the
// path middle
inline Graph whipping_top() {
  Graph g(7);
  for (int v = 2; v <= 6; ++v) g.add_edge_internal(1, v);
  for (int v = 2; v < 6; ++v) g.add_edge_internal(v, v + 1);
  g.add_edge_internal(0, 4);
  return g;
}

// C11 with vertex 0 duplicated as a nonadjacent twin (id 11).
inline Graph c11_with_false_twin() {
  Graph g(12);
  for (int i = 0; i < 11; ++i) g.add_edge_internal(i, (i + 1) % 11);
  g.add_edge_internal(11, 1);
  g.add_edge_internal(11, 10);
  return g;
}

// C11 with one cycle vertex replaced by a C4 module: path 0..9 plus the
// module {10,11,12,13}, every module vertex adjacent to both path ends.
inline Graph c11_with_c4_module() {
  Graph g(14);
  for (int i = 0; i + 1 < 10; ++i) g.add_edge_internal(i, i + 1);
  g.add_edge_internal(10, 11);
  g.add_edge_internal(11, 12);
  g.add_edge_internal(12, 13);
  g.add_edge_internal(13, 10);
  for (int m = 10; m <= 13; ++m) {
    g.add_edge_internal(m, 0);
    g.add_edge_internal(m, 9);
  }
  return g;
}

// Random connected chordal graph via incremental simplicial construction:
// each new vertex is attached to a clique inside an existing closed
// neighborhood.
inline Graph random_chordal(int n, uint64_t seed) {
  intdel::Rng rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    int anchor = int(rng.below(uint64_t(v)));
    std::vector<int> pool = intdel::closed_neighborhood(g, anchor).to_vector();
    g.add_edge_internal(v, anchor);
    for (int u : pool) {
      if (u != anchor && rng.bernoulli(0.45)) g.add_edge_internal(v, u);
    }
  }
  return g;
}

// Two daggers hanging off one long path: c sees p1..p7 (shallow s1), c2 sees
// p10..p17 (shallow s2), far enough apart that no witness mixes them. The
// left witness has the smaller container.
struct SharedPathDaggers {
  Graph g;
  int s1, c, s2, c2;
  // path vertices are ids 0..19
};

inline SharedPathDaggers shared_path_daggers() {
  SharedPathDaggers f;
  f.g = Graph(24);
  for (int i = 0; i + 1 < 20; ++i) f.g.add_edge_internal(i, i + 1);
  f.c = 20;
  f.s1 = 21;
  f.c2 = 22;
  f.s2 = 23;
  for (int i = 1; i <= 7; ++i) f.g.add_edge_internal(f.c, i);
  for (int i = 10; i <= 17; ++i) f.g.add_edge_internal(f.c2, i);
  f.g.add_edge_internal(f.s1, f.c);
  f.g.add_edge_internal(f.s2, f.c2);
  return f;
}

// Two congenial 11-holes: C11 plus u=11 adjacent to v0,v1,v2.
inline Graph two_congenial_holes() {
  Graph g(12);
  for (int i = 0; i < 11; ++i) g.add_edge_internal(i, (i + 1) % 11);
  g.add_edge_internal(11, 0);
  g.add_edge_internal(11, 1);
  g.add_edge_internal(11, 2);
  return g;
}

}  // namespace fixtures

#endif
