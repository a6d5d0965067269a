#ifndef INTDEL_TESTKIT_HPP
#define INTDEL_TESTKIT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/recognition.hpp"
#include "intdel/solver.hpp"

namespace intdel {

// Deterministic RNG: mt19937_64 plus fully-specified derivations, so the same
// seed is bit-exact across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  double unit() { return double(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

// Intersection graph of n random intervals with 2n distinct endpoints.
inline Graph random_interval_graph(int n, uint64_t seed) {
  require(n >= 1, "random_interval_graph: n must be positive");
  Rng rng(seed);
  std::vector<int> endpoints(2 * n);
  for (int i = 0; i < 2 * n; ++i) endpoints[i] = i;
  for (int i = 2 * n - 1; i > 0; --i)
    std::swap(endpoints[i], endpoints[rng.below(uint64_t(i) + 1)]);

  std::vector<std::pair<int, int>> iv(n);
  for (int i = 0; i < n; ++i) {
    int a = endpoints[2 * i], b = endpoints[2 * i + 1];
    iv[i] = {std::min(a, b), std::max(a, b)};
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(iv[i].second < iv[j].first || iv[j].second < iv[i].first))
        g.add_edge_internal(i, j);
  return g;
}

inline Graph random_gnp(int n, double p, uint64_t seed) {
  require(n >= 0, "random_gnp: negative n");
  Rng rng(seed);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.add_edge_internal(i, j);
  return g;
}

// An interval graph with q noise vertices welded on at edge probability p;
// deleting the noise restores intervality, so OPT <= q.
struct PlantedInstance {
  Graph graph;
  Bitset planted;
  uint64_t seed = 0;
  int n_intervals = 0;
  int q_noise = 0;
  double noise_edge_prob = 0.0;
};

inline PlantedInstance plant_noise(const Graph& g, int q, double p, uint64_t seed) {
  require(is_interval(g).has_value(), "plant_noise: base graph not interval");
  require(q >= 0, "plant_noise: negative noise count");
  Rng rng(seed);
  int n = g.n();
  Graph h(n + q);
  for (int u = 0; u < n; ++u) {
    INTDEL_FOR_SET(v, g.neighbors(u)) {
      if (v > u) h.add_edge_internal(u, v);
    }
  }
  for (int i = n; i < n + q; ++i)
    for (int u = 0; u < i; ++u)
      if (rng.bernoulli(p)) h.add_edge_internal(u, i);

  PlantedInstance inst;
  inst.graph = std::move(h);
  inst.planted = Bitset(n + q);
  for (int i = n; i < n + q; ++i) inst.planted.set(i);
  inst.seed = seed;
  inst.n_intervals = n;
  inst.q_noise = q;
  inst.noise_edge_prob = p;
  return inst;
}

// Exact oracle: subsets by (size, lexicographic), recognition per subset.
inline Solution brute_force_min_deletion(const Graph& g, int k) {
  require(k >= 0, "brute_force_min_deletion: negative budget");
  int n = g.n();
  if (is_interval(g).has_value()) return Solution::of({});
  for (int size = 1; size <= std::min(k, n); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Bitset del = Bitset::of(n, pick);
      if (is_interval(delete_vertices(g, del)).has_value()) return Solution::of(pick);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return Solution::no();
}

}  // namespace intdel

#endif
