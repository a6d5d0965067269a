#ifndef INTDEL_GRAPH_HPP
#define INTDEL_GRAPH_HPP

#include <algorithm>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "intdel/bitset.hpp"
#include "intdel/errors.hpp"

namespace intdel {

using VertexSet = Bitset;
using VertexSequence = std::vector<int>;

// Immutable simple undirected graph over ids 0..n-1, adjacency as a dense
// bit matrix. "Deletion" produces a new induced-subgraph value; parent_ids
// maps each vertex back to the graph it was induced from (-1 for synthetic
// vertices and for graphs built from scratch, where ids are their own map).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), parent_ids_(n) {
    for (int v = 0; v < n; ++v) parent_ids_[v] = v;
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge_internal(u, v);
    return g;
  }

  int n() const { return n_; }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += adj_[v].count();
    return total / 2;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  const Bitset& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return neighbors(v).count(); }

  Bitset all_vertices() const { return Bitset::full(n_); }

  const std::vector<int>& parent_ids() const { return parent_ids_; }
  int parent_id(int v) const {
    check_vertex(v);
    return parent_ids_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  void check_vertex(int v) const {
    require(v >= 0 && v < n_, "vertex id " + std::to_string(v) + " out of range");
  }

  // Construction-time only; graphs are value types treated as immutable
  // once handed out.
  void add_edge_internal(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "self-loop rejected");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void set_parent_ids_internal(std::vector<int> ids) { parent_ids_ = std::move(ids); }

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> parent_ids_;
  std::vector<std::string> labels_;
};

inline Bitset closed_neighborhood(const Graph& g, int u) {
  Bitset out = g.neighbors(u);
  out.set(u);
  return out;
}

inline Bitset common_neighbors(const Graph& g, const Bitset& xs) {
  require(xs.any(), "common_neighbors: empty vertex set");
  Bitset out = Bitset::full(g.n());
  INTDEL_FOR_SET(x, xs) out &= g.neighbors(x);
  return out;
}

inline bool is_clique(const Graph& g, const Bitset& xs) {
  INTDEL_FOR_SET(u, xs) {
    Bitset rest = xs;
    rest.reset(u);
    if (!rest.is_subset_of(g.neighbors(u))) return false;
  }
  return true;
}

// New graph over `keep`, dense-reindexed in ascending id order; parent_ids
// maps back into g.
inline Graph induced_subgraph(const Graph& g, const Bitset& keep) {
  require(keep.capacity() <= g.n(), "induced_subgraph: set from a larger graph");
  std::vector<int> old_ids = keep.to_vector();
  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = int(i);

  Graph h(int(old_ids.size()));
  for (size_t i = 0; i < old_ids.size(); ++i) {
    Bitset kept = g.neighbors(old_ids[i]) & keep;
    INTDEL_FOR_SET(u, kept) {
      if (new_id[u] > int(i)) h.add_edge_internal(int(i), new_id[u]);
    }
  }
  h.set_parent_ids_internal(std::move(old_ids));
  return h;
}

inline Graph delete_vertices(const Graph& g, const Bitset& del) {
  return induced_subgraph(g, g.all_vertices() - del);
}

inline Graph delete_vertex(const Graph& g, int v) {
  Bitset del(g.n());
  del.set(v);
  return delete_vertices(g, del);
}

inline bool is_connected_within(const Graph& g, const Bitset& allowed, int a, int b) {
  if (a == b) return allowed.test(a);
  if (!allowed.test(a) || !allowed.test(b)) return false;
  Bitset seen(g.n());
  seen.set(a);
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    Bitset fresh = (g.neighbors(v) & allowed) - seen;
    if (fresh.test(b)) return true;
    INTDEL_FOR_SET(u, fresh) {
      seen.set(u);
      queue.push_back(u);
    }
  }
  return false;
}

inline bool is_separator(const Graph& g, const Bitset& s, int a, int b) {
  g.check_vertex(a);
  g.check_vertex(b);
  require(!s.test(a) && !s.test(b), "is_separator: endpoint inside separator");
  Bitset allowed = g.all_vertices() - s;
  return !is_connected_within(g, allowed, a, b);
}

// Shortest a-b path in g - forbidden; ties resolved by lexicographic BFS
// (vertices scanned in ascending id, parent = first discoverer). A shortest
// path is chordless in the surviving graph.
inline std::optional<VertexSequence> shortest_path_avoiding(const Graph& g, int a, int b,
                                                            const Bitset& forbidden) {
  g.check_vertex(a);
  g.check_vertex(b);
  require(!forbidden.test(a) && !forbidden.test(b),
          "shortest_path_avoiding: endpoint forbidden");
  if (a == b) return VertexSequence{a};
  Bitset allowed = g.all_vertices() - forbidden;
  std::vector<int> parent(g.n(), -1);
  Bitset seen(g.n());
  seen.set(a);
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
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
      queue.push_back(u);
    }
  }
  return std::nullopt;
}

// Components listed in ascending order of their smallest vertex.
inline std::vector<Bitset> connected_components(const Graph& g) {
  std::vector<Bitset> comps;
  Bitset seen(g.n());
  for (int s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    Bitset comp(g.n());
    comp.set(s);
    seen.set(s);
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      Bitset fresh = g.neighbors(v) - seen;
      INTDEL_FOR_SET(u, fresh) {
        seen.set(u);
        comp.set(u);
        queue.push_back(u);
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.n() <= 1 || connected_components(g).size() == 1;
}

inline std::vector<int> map_through(const std::vector<int>& ids,
                                    const std::vector<int>& parent_ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(parent_ids[v]);
  return out;
}

// --- canonical on-disk format: "n m" then m lines "u v", '#' comments ---

inline Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_data_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_data_line()) throw ParseError("missing header line", line_no);
  long long n, m;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m)) throw ParseError("header must be 'n m'", line_no);
    std::string extra;
    if (hs >> extra) throw ParseError("trailing tokens after header", line_no);
    if (n < 0 || m < 0) throw ParseError("negative count in header", line_no);
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line()) throw ParseError("expected " + std::to_string(m) + " edges", line_no);
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) throw ParseError("edge line must be 'u v'", line_no);
    std::string extra;
    if (es >> extra) throw ParseError("trailing tokens after edge", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    g.add_edge_internal(int(u), int(v));
  }
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u) {
    Bitset later = g.neighbors(u);
    INTDEL_FOR_SET(v, later) {
      if (v > u) edges.emplace_back(u, v);
    }
  }
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace intdel

#endif
