#ifndef NCG_GRAPH_HPP
#define NCG_GRAPH_HPP

#include <algorithm>
#include <cassert>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

// Marker for unreachable vertex pairs in distance tables.
inline constexpr int kUnreachable = -1;

struct GameConfig {
  Rational alpha;  // edge price, > 0
  int n = 0;       // number of players/vertices

  void validate() const {
    if (n < 1) throw std::invalid_argument("GameConfig: n must be >= 1");
    if (alpha <= 0) throw std::invalid_argument("GameConfig: alpha must be > 0");
  }
};

// Undirected graph on vertices 0..n-1 where every edge is annotated with the
// player that bought it. The strategy of player i is the set of edges it owns.
struct OwnedGraph {
  struct Edge {
    int u, v;   // endpoints, u != v
    int owner;  // owner == u or owner == v
  };

  int n = 0;
  std::vector<Edge> edges;

  OwnedGraph() = default;
  explicit OwnedGraph(int n_) : n(n_) {}

  void add_edge(int u, int v, int owner) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("add_edge: vertex id out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (owner != u && owner != v)
      throw std::invalid_argument("add_edge: owner must be an endpoint");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    edges.push_back({u, v, owner});
  }

  bool has_edge(int u, int v) const {
    for (const Edge& e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
  }

  // owner of {u,v}, or -1 if the edge is absent
  int edge_owner(int u, int v) const {
    for (const Edge& e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.owner;
    return -1;
  }

  int edges_owned_by(int i) const {
    int k = 0;
    for (const Edge& e : edges) k += (e.owner == i);
    return k;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }
};

struct DistanceTable {
  int n = 0;
  std::vector<int> d;  // n*n, kUnreachable marks disconnected pairs

  int operator()(int i, int j) const { return d[i * n + j]; }
};

inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj,
                                      int src) {
  std::vector<int> dist(adj.size(), kUnreachable);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[u])
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Exact unweighted shortest-path distances; edge ownership is ignored.
inline DistanceTable all_distances(const OwnedGraph& g) {
  DistanceTable t;
  t.n = g.n;
  t.d.resize(static_cast<size_t>(g.n) * g.n);
  auto adj = g.adjacency();
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(adj, s);
    std::copy(dist.begin(), dist.end(), t.d.begin() + static_cast<size_t>(s) * g.n);
  }
  return t;
}

// alpha * |edges owned by i| + sum of distances from i.
// nullopt when some vertex is unreachable from i.
inline std::optional<Rational> player_cost(const OwnedGraph& g, int i,
                                           const GameConfig& cfg) {
  if (i < 0 || i >= g.n) throw std::invalid_argument("player_cost: bad vertex id");
  auto dist = bfs_distances(g.adjacency(), i);
  long total = 0;
  for (int j = 0; j < g.n; ++j) {
    if (dist[j] == kUnreachable) return std::nullopt;
    total += dist[j];
  }
  return cfg.alpha * g.edges_owned_by(i) + total;
}

// alpha * |E| + sum of distances over all ordered pairs.
inline std::optional<Rational> social_cost(const OwnedGraph& g,
                                           const GameConfig& cfg) {
  auto adj = g.adjacency();
  long total = 0;
  for (int i = 0; i < g.n; ++i) {
    auto dist = bfs_distances(adj, i);
    for (int j = 0; j < g.n; ++j) {
      if (dist[j] == kUnreachable) return std::nullopt;
      total += dist[j];
    }
  }
  return cfg.alpha * static_cast<long>(g.edges.size()) + total;
}

// A minimum-length cycle a_0..a_{c-1}, or nullopt for acyclic graphs.
// For a shortest cycle, distances in G between cycle vertices equal their
// distances along the cycle.
inline std::optional<std::vector<int>> shortest_cycle(const OwnedGraph& g) {
  auto adj = g.adjacency();
  std::optional<std::vector<int>> best;
  // Shortest cycle through each edge {u,v}: dist(u,v) in G minus that edge, +1.
  for (const auto& e : g.edges) {
    std::vector<int> dist(g.n, kUnreachable), parent(g.n, -1);
    std::deque<int> queue{e.u};
    dist[e.u] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : adj[x]) {
        if ((x == e.u && w == e.v) || (x == e.v && w == e.u)) continue;
        if (dist[w] == kUnreachable) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue.push_back(w);
        }
      }
    }
    if (dist[e.v] == kUnreachable) continue;
    int len = dist[e.v] + 1;
    if (!best || len < static_cast<int>(best->size())) {
      std::vector<int> cycle;
      for (int x = e.v; x != -1; x = parent[x]) cycle.push_back(x);
      std::reverse(cycle.begin(), cycle.end());  // e.u ... e.v
      best = cycle;
    }
  }
#ifndef NDEBUG
  if (best) {
    // shortest-cycle property: graph distance == cycle distance
    auto table = all_distances(g);
    int c = static_cast<int>(best->size());
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) {
        int on_cycle = std::min((j - i + c) % c, (i - j + c) % c);
        assert(table((*best)[i], (*best)[j]) == on_cycle);
      }
  }
#endif
  return best;
}

inline std::optional<int> girth(const OwnedGraph& g) {
  auto cyc = shortest_cycle(g);
  if (!cyc) return std::nullopt;
  return static_cast<int>(cyc->size());
}

struct BiconnectedDecomposition {
  struct Component {
    std::vector<int> vertices;                 // sorted
    std::vector<std::pair<int, int>> edges;    // edges inside the component
    bool non_trivial = false;                  // >= 3 vertices, no bridge
    // satellites[k] = vertices outside the component whose closest component
    // vertex is vertices[k]; only filled for non-trivial components.
    std::vector<std::vector<int>> satellites;

    int deg_in_component(int v) const {
      int d = 0;
      for (auto& [a, b] : edges) d += (a == v) + (b == v);
      return d;
    }
  };
  std::vector<Component> components;
  std::vector<int> articulation_points;
};

// Standard Hopcroft-Tarjan biconnected components with satellite sets S(v)
// attached to each non-trivial component.
inline BiconnectedDecomposition biconnected(const OwnedGraph& g) {
  BiconnectedDecomposition out;
  auto adj = g.adjacency();
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<std::pair<int, int>> stack;
  int timer = 0;

  // iterative DFS to survive deep graphs
  struct Frame {
    int v, parent;
    size_t next = 0;
    int children = 0;
  };
  for (int root = 0; root < g.n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> frames{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        int w = adj[f.v][f.next++];
        if (w == f.parent) {
          f.parent = -2;  // skip the tree edge to the parent exactly once
          continue;
        }
        if (disc[w] == -1) {
          stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v});
        } else if (disc[w] < disc[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (frames.empty()) continue;
        Frame& p = frames.back();
        p.children++;
        low[p.v] = std::min(low[p.v], low[v]);
        if (low[v] >= disc[p.v]) {
          // pop one biconnected component
          BiconnectedDecomposition::Component comp;
          std::set<int> verts;
          while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            comp.edges.push_back({a, b});
            verts.insert(a);
            verts.insert(b);
            if (a == p.v && b == v) break;
          }
          comp.vertices.assign(verts.begin(), verts.end());
          comp.non_trivial = comp.vertices.size() >= 3;
          out.components.push_back(std::move(comp));
        }
      }
    }
  }

  // articulation points: vertices appearing in more than one component
  std::vector<int> appear(g.n, 0);
  for (auto& comp : out.components)
    for (int v : comp.vertices) appear[v]++;
  for (int v = 0; v < g.n; ++v)
    if (appear[v] > 1) out.articulation_points.push_back(v);

  // satellite sets for non-trivial components
  for (auto& comp : out.components) {
    if (!comp.non_trivial) continue;
    comp.satellites.resize(comp.vertices.size());
    std::vector<int> closest(g.n, -1);
    std::deque<int> queue;
    for (int v : comp.vertices) {
      closest[v] = v;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u])
        if (closest[w] == -1) {
          closest[w] = closest[u];
          queue.push_back(w);
        }
    }
    for (int w = 0; w < g.n; ++w) {
      if (closest[w] == -1 || closest[w] == w) continue;
      auto it = std::lower_bound(comp.vertices.begin(), comp.vertices.end(),
                                 closest[w]);
      comp.satellites[it - comp.vertices.begin()].push_back(w);
    }
  }
  return out;
}

// Theorem: the girth of any Nash equilibrium is at least 2*alpha/n + 2.
inline Rational theorem1_min_girth(const GameConfig& cfg) {
  cfg.validate();
  return 2 * cfg.alpha / cfg.n + 2;
}

}  // namespace ncg

#endif  // NCG_GRAPH_HPP
