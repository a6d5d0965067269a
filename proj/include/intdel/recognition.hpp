#ifndef INTDEL_RECOGNITION_HPP
#define INTDEL_RECOGNITION_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "intdel/graph.hpp"
#include "intdel/holes.hpp"
#include "intdel/pqtree.hpp"

namespace intdel {

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;       // elimination order, front eliminated first
  std::optional<Hole> hole;   // certificate when not chordal
};

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff g is chordal (verified by the follower check).
inline ChordalityResult is_chordal(const Graph& g) {
  int n = g.n();
  ChordalityResult res;
  if (n == 0) {
    res.chordal = true;
    return res;
  }

  std::vector<int> weight(n, 0), visit_order;
  visit_order.reserve(n);
  Bitset visited(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited.test(v) && (best == -1 || weight[v] > weight[best])) best = v;
    visited.set(best);
    visit_order.push_back(best);
    Bitset unvisited_nbrs = g.neighbors(best) - visited;
    INTDEL_FOR_SET(u, unvisited_nbrs) ++weight[u];
  }

  std::vector<int> elim(visit_order.rbegin(), visit_order.rend());
  std::vector<int> pos(n);
  for (int t = 0; t < n; ++t) pos[elim[t]] = t;

  for (int t = 0; t < n; ++t) {
    int v = elim[t];
    int follower = -1;
    Bitset later(n);
    INTDEL_FOR_SET(u, g.neighbors(v)) {
      if (pos[u] <= t) continue;
      later.set(u);
      if (follower == -1 || pos[u] < pos[follower]) follower = u;
    }
    if (follower == -1) continue;
    later.reset(follower);
    if (!later.is_subset_of(g.neighbors(follower))) {
      res.chordal = false;
      res.hole = shortest_hole(g);
      ensure(res.hole.has_value(), "chordality: failed order but no hole found");
      return res;
    }
  }
  res.chordal = true;
  res.peo = std::move(elim);
  return res;
}

// Maximal cliques of a chordal graph in canonical (lexicographic) order.
inline std::vector<Bitset> maximal_cliques_chordal(const Graph& g,
                                                   const std::vector<int>& peo) {
  int n = g.n();
  std::vector<int> pos(n);
  for (int t = 0; t < n; ++t) pos[peo[t]] = t;
  std::vector<Bitset> cand;
  cand.reserve(n);
  for (int t = 0; t < n; ++t) {
    int v = peo[t];
    Bitset c(n);
    c.set(v);
    INTDEL_FOR_SET(u, g.neighbors(v)) {
      if (pos[u] > t) c.set(u);
    }
    cand.push_back(c);
  }
  std::vector<char> keep(cand.size(), 1);
  for (size_t i = 0; i < cand.size(); ++i) {
    for (size_t j = 0; j < cand.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (cand[i].is_subset_of(cand[j]) &&
          (cand[i] != cand[j] || j < i))
        keep[i] = 0;
    }
  }
  std::vector<std::pair<std::vector<int>, Bitset>> out;
  for (size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) out.emplace_back(cand[i].to_vector(), cand[i]);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Bitset> cliques;
  for (auto& [ids, bits] : out) cliques.push_back(bits);
  return cliques;
}

// Clique path of an interval graph: K_0..K_m with every vertex's cliques
// consecutive; components contiguous, each oriented lexicographically.
struct CliquePath {
  std::vector<std::vector<int>> cliques;
  std::vector<Bitset> clique_bits;
  std::vector<int> first, last;  // -1 for vertices of an empty graph slot

  int size() const { return int(cliques.size()); }
  Bitset separator(int i) const { return clique_bits[i] & clique_bits[i + 1]; }
};

// Exhaustive consecutive-arrangement oracle, usable up to ~8 cliques.
inline std::optional<std::vector<int>> bruteforce_clique_path_order(
    int n, const std::vector<Bitset>& cliques) {
  int m = int(cliques.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  auto consecutive = [&](const std::vector<int>& order) {
    for (int v = 0; v < n; ++v) {
      int first = -1, last = -1;
      int cnt = 0;
      for (int i = 0; i < m; ++i) {
        if (cliques[order[i]].test(v)) {
          if (first < 0) first = i;
          last = i;
          ++cnt;
        }
      }
      if (cnt > 0 && last - first + 1 != cnt) return false;
    }
    return true;
  };
  do {
    if (consecutive(perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace detail {

inline std::vector<int> canonical_column_order(const Graph& g,
                                               const std::vector<Bitset>& cliques,
                                               std::vector<int> order) {
  auto comps = connected_components(g);
  std::vector<int> comp_of(g.n(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    INTDEL_FOR_SET(v, comps[c]) comp_of[v] = int(c);
  auto comp_of_clique = [&](int ci) {
    int v = cliques[ci].first();
    return v < 0 ? -1 : comp_of[v];
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return comp_of_clique(a) < comp_of_clique(b);
  });
  // orient each component segment lexicographically
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j < order.size() && comp_of_clique(order[j]) == comp_of_clique(order[i]))
      ++j;
    auto key = [&](size_t at) { return cliques[order[at]].to_vector(); };
    size_t lo = i, hi = j - 1;
    while (lo < hi && key(lo) == key(hi)) ++lo, --hi;
    if (lo < hi && key(hi) < key(lo)) std::reverse(order.begin() + i, order.begin() + j);
    i = j;
  }
  return order;
}

}  // namespace detail

inline std::optional<CliquePath> is_interval(const Graph& g) {
  int n = g.n();
  if (n == 0) return CliquePath{};

  ChordalityResult ch = is_chordal(g);
  if (!ch.chordal) return std::nullopt;
  std::vector<Bitset> cliques = maximal_cliques_chordal(g, ch.peo);
  int m = int(cliques.size());
  ensure(m <= n, "chordal graph with more than n maximal cliques");

  PQTree tree(m);
  std::vector<std::vector<int>> rows(n);
  for (int ci = 0; ci < m; ++ci)
    INTDEL_FOR_SET(v, cliques[ci]) rows[v].push_back(ci);
  for (int v = 0; v < n; ++v) {
    if (!tree.reduce(rows[v])) {
      if (m <= 8)
        ensure(!bruteforce_clique_path_order(n, cliques).has_value(),
               "pq-tree rejected an orderable clique set");
      return std::nullopt;
    }
  }

  std::vector<int> order = detail::canonical_column_order(g, cliques, tree.frontier());

  CliquePath path;
  path.first.assign(n, -1);
  path.last.assign(n, -1);
  for (int i = 0; i < m; ++i) {
    path.clique_bits.push_back(cliques[order[i]]);
    path.cliques.push_back(cliques[order[i]].to_vector());
    INTDEL_FOR_SET(v, cliques[order[i]]) {
      if (path.first[v] < 0) path.first[v] = i;
      path.last[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    ensure(path.first[v] >= 0, "vertex missing from every maximal clique");
    int span = path.last[v] - path.first[v] + 1;
    int cnt = 0;
    for (int i = path.first[v]; i <= path.last[v]; ++i)
      if (path.clique_bits[i].test(v)) ++cnt;
    ensure(cnt == span, "clique path lost consecutiveness");
  }
  return path;
}

// Greedy minimalization in ascending id order: drop v whenever the remainder
// still fails recognition. Absent iff g is interval.
inline std::optional<Bitset> minimal_forbidden_set(const Graph& g) {
  if (is_interval(g)) return std::nullopt;
  Bitset x = g.all_vertices();
  for (int v = 0; v < g.n(); ++v) {
    if (!x.test(v)) continue;
    Bitset trial = x;
    trial.reset(v);
    if (!is_interval(induced_subgraph(g, trial))) x = trial;
  }
  return x;
}

// Distinct nonempty intersections of consecutive cliques along the clique
// path; each verified to be a minimal x-y separator.
inline std::vector<Bitset> minimal_separators_interval(const Graph& g) {
  auto path = is_interval(g);
  require(path.has_value(), "minimal_separators_interval: input not interval");
  std::vector<Bitset> out;
  std::vector<std::vector<int>> seen;
  for (int i = 0; i + 1 < path->size(); ++i) {
    Bitset s = path->separator(i);
    if (s.empty()) continue;
    std::vector<int> key = s.to_vector();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);

    int x = (path->clique_bits[i] - path->clique_bits[i + 1]).first();
    int y = (path->clique_bits[i + 1] - path->clique_bits[i]).first();
    ensure(x >= 0 && y >= 0, "clique path with nested consecutive cliques");
    ensure(is_separator(g, s, x, y), "clique-intersection is not a separator");
    INTDEL_FOR_SET(drop, s) {
      Bitset smaller = s;
      smaller.reset(drop);
      ensure(!is_separator(g, smaller, x, y), "clique-intersection separator not minimal");
    }
    out.push_back(s);
  }
  ensure(int(out.size()) <= std::max(0, g.n() - 1), "too many minimal separators");
  return out;
}

}  // namespace intdel

#endif
