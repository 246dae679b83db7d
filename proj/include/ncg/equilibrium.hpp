#ifndef NCG_EQUILIBRIUM_HPP
#define NCG_EQUILIBRIUM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

namespace ncg {

struct DeviationMode {
  enum class Kind { Exhaustive, Local };
  Kind kind = Kind::Exhaustive;
  int local_budget = 2;        // max edges changed per player in local mode
  int exhaustive_ceiling = 15; // exhaustive enumeration refused above this n

  static DeviationMode exhaustive(int ceiling = 15) {
    return {Kind::Exhaustive, 2, ceiling};
  }
  static DeviationMode local(int budget = 2) {
    return {Kind::Local, budget, 15};
  }
};

struct Witness {
  std::vector<int> players;                     // deviating player(s)
  std::vector<std::vector<int>> new_strategies; // owned-edge endpoints per player
  Rational delta;                               // exact joint cost change, < 0
};

struct Verdict {
  bool stable = false;
  // "stable" for a complete test, "locally stable" when only the local
  // deviation set was searched, "not stable" otherwise.
  std::string label;
  std::optional<Witness> witness;
};

namespace detail {

// Cost of player i when it owns edges to exactly `endpoints` and all other
// players keep their strategies. nullopt = some vertex unreachable.
inline std::optional<Rational> cost_with_strategy(
    const OwnedGraph& g, int i, const std::vector<int>& endpoints,
    const GameConfig& cfg) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    if (e.owner == i) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int j : endpoints) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  auto dist = bfs_distances(adj, i);
  long total = 0;
  for (int j = 0; j < g.n; ++j) {
    if (dist[j] == kUnreachable) return std::nullopt;
    total += dist[j];
  }
  return cfg.alpha * static_cast<long>(endpoints.size()) + total;
}

// Candidate endpoints for player i's bought edges: every other vertex except
// those already connected to i by an edge some other player owns (buying a
// duplicate is never profitable for alpha > 0).
inline std::vector<int> strategy_candidates(const OwnedGraph& g, int i,
                                            int partner = -1) {
  std::vector<int> cand;
  for (int j = 0; j < g.n; ++j) {
    if (j == i) continue;
    int owner = g.edge_owner(i, j);
    if (owner != -1 && owner != i && owner != partner) continue;
    cand.push_back(j);
  }
  return cand;
}

inline std::vector<int> owned_endpoints(const OwnedGraph& g, int i) {
  std::vector<int> out;
  for (const auto& e : g.edges)
    if (e.owner == i) out.push_back(e.u == i ? e.v : e.u);
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerates strategies of player i permitted by `mode`, in a deterministic
// order. fn returns false to stop early.
template <typename Fn>
void for_each_strategy(const OwnedGraph& g, int i, const DeviationMode& mode,
                       Fn&& fn, int partner = -1) {
  auto cand = strategy_candidates(g, i, partner);
  if (mode.kind == DeviationMode::Kind::Exhaustive) {
    if (g.n > mode.exhaustive_ceiling)
      throw std::invalid_argument(
          "exhaustive deviation enumeration refused for n > " +
          std::to_string(mode.exhaustive_ceiling));
    const uint64_t total = uint64_t{1} << cand.size();
    std::vector<int> s;
    for (uint64_t mask = 0; mask < total; ++mask) {
      s.clear();
      for (size_t b = 0; b < cand.size(); ++b)
        if (mask >> b & 1) s.push_back(cand[b]);
      if (!fn(s)) return;
    }
    return;
  }
  // local mode: strategies whose symmetric difference with the current
  // strategy has size <= budget
  auto owned = owned_endpoints(g, i);
  std::vector<int> addable;
  for (int j : cand)
    if (!std::binary_search(owned.begin(), owned.end(), j)) addable.push_back(j);
  const int budget = mode.local_budget;
  const uint64_t drop_total = uint64_t{1} << owned.size();
  std::vector<size_t> idx;
  for (uint64_t dmask = 0; dmask < drop_total; ++dmask) {
    int drops = __builtin_popcountll(dmask);
    if (drops > budget) continue;
    std::vector<int> base;
    for (size_t b = 0; b < owned.size(); ++b)
      if (!(dmask >> b & 1)) base.push_back(owned[b]);
    const int add_budget = budget - drops;
    auto emit = [&]() {
      std::vector<int> s = base;
      for (size_t k : idx) s.push_back(addable[k]);
      std::sort(s.begin(), s.end());
      return fn(s);
    };
    idx.clear();
    if (!emit()) return;
    auto rec = [&](auto&& self, size_t start) -> bool {
      if (static_cast<int>(idx.size()) >= add_budget) return true;
      for (size_t k = start; k < addable.size(); ++k) {
        idx.push_back(k);
        if (!emit()) return false;
        if (!self(self, k + 1)) return false;
        idx.pop_back();
      }
      return true;
    };
    if (!rec(rec, 0)) return;
  }
}

inline bool is_connected(const OwnedGraph& g) {
  if (g.n == 0) return true;
  auto dist = bfs_distances(g.adjacency(), 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

}  // namespace detail

struct BestResponse {
  std::vector<int> endpoints;  // owned-edge endpoints of the minimizer
  Rational cost;
};

// Minimizes player i's cost over the mode's strategy set, everyone else held
// fixed. Ties keep the incumbent strategy.
inline BestResponse best_response(const OwnedGraph& g, int i,
                                  const GameConfig& cfg,
                                  const DeviationMode& mode) {
  if (i < 0 || i >= g.n) throw std::invalid_argument("best_response: bad vertex");
  auto incumbent = detail::owned_endpoints(g, i);
  auto incumbent_cost = detail::cost_with_strategy(g, i, incumbent, cfg);
  std::optional<Rational> best_cost =
      incumbent_cost ? std::optional<Rational>(*incumbent_cost) : std::nullopt;
  std::vector<int> best = incumbent;
  detail::for_each_strategy(g, i, mode, [&](const std::vector<int>& s) {
    auto c = detail::cost_with_strategy(g, i, s, cfg);
    if (c && (!best_cost || *c < *best_cost)) {
      best_cost = *c;
      best = s;
    }
    return true;
  });
  if (!best_cost)
    throw std::invalid_argument("best_response: player cannot connect");
  return {best, *best_cost};
}

// Nash stability under the mode's deviation set. Exhaustive mode is a sound
// and complete test; local mode is sound for "not stable" only.
inline Verdict is_nash(const OwnedGraph& g, const GameConfig& cfg,
                       const DeviationMode& mode) {
  if (!detail::is_connected(g))
    throw std::invalid_argument("is_nash: graph must be connected");
  for (int i = 0; i < g.n; ++i) {
    auto incumbent = detail::owned_endpoints(g, i);
    auto incumbent_cost = detail::cost_with_strategy(g, i, incumbent, cfg);
    auto br = best_response(g, i, cfg, mode);
    if (incumbent_cost && br.cost < *incumbent_cost) {
      Witness w;
      w.players = {i};
      w.new_strategies = {br.endpoints};
      w.delta = br.cost - *incumbent_cost;
      return {false, "not stable", w};
    }
  }
  bool exhaustive = mode.kind == DeviationMode::Kind::Exhaustive;
  return {true, exhaustive ? "stable" : "locally stable", std::nullopt};
}

// 2-coalition stability: no pair of players has a joint strategy change that
// strictly decreases the sum of their two costs.
inline Verdict is_2coalition_stable(const OwnedGraph& g, const GameConfig& cfg,
                                    const DeviationMode& mode) {
  if (!detail::is_connected(g))
    throw std::invalid_argument("is_2coalition_stable: graph must be connected");
  if (mode.kind == DeviationMode::Kind::Exhaustive &&
      g.n > mode.exhaustive_ceiling)
    throw std::invalid_argument("exhaustive pair enumeration refused for n > " +
                                std::to_string(mode.exhaustive_ceiling));
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      auto inc_i = detail::owned_endpoints(g, i);
      auto inc_j = detail::owned_endpoints(g, j);
      auto base_i = detail::cost_with_strategy(g, i, inc_i, cfg);
      auto base_j = detail::cost_with_strategy(g, j, inc_j, cfg);
      if (!base_i || !base_j) continue;
      Rational base = *base_i + *base_j;
      std::optional<Witness> found;
      detail::for_each_strategy(
          g, i, mode,
          [&](const std::vector<int>& si) {
            // apply i's strategy, then search j's
            OwnedGraph h = g;
            std::erase_if(h.edges, [&](const OwnedGraph::Edge& e) {
              return e.owner == i;
            });
            for (int t : si) {
              if (h.has_edge(i, t)) continue;  // j may re-own it below
              h.edges.push_back({i, t, i});
            }
            bool stop = false;
            detail::for_each_strategy(
                h, j, mode,
                [&](const std::vector<int>& sj) {
                  // skip profiles where both buy the same edge
                  if (std::find(sj.begin(), sj.end(), i) != sj.end() &&
                      std::find(si.begin(), si.end(), j) != si.end())
                    return true;
                  auto cj = detail::cost_with_strategy(h, j, sj, cfg);
                  if (!cj) return true;
                  OwnedGraph h2 = h;
                  std::erase_if(h2.edges, [&](const OwnedGraph::Edge& e) {
                    return e.owner == j;
                  });
                  for (int t : sj) {
                    if (h2.has_edge(j, t)) continue;
                    h2.edges.push_back({j, t, j});
                  }
                  auto ci = detail::cost_with_strategy(
                      h2, i, detail::owned_endpoints(h2, i), cfg);
                  if (!ci) return true;
                  if (*ci + *cj < base) {
                    Witness w;
                    w.players = {i, j};
                    w.new_strategies = {si, sj};
                    w.delta = *ci + *cj - base;
                    found = w;
                    stop = true;
                    return false;
                  }
                  return true;
                },
                i);
            return !stop;
          },
          j);
      if (found) return {false, "not stable", found};
    }
  }
  bool exhaustive = mode.kind == DeviationMode::Kind::Exhaustive;
  return {true, exhaustive ? "stable" : "locally stable", std::nullopt};
}

// Non-tree Nash equilibrium family on n = 2s+3 players at alpha = n-3:
// two hub vertices 0 and 1, three middle vertices 2,3,4 each buying an edge
// to both hubs (so the graph contains 4-cycles), and s-1 pendant leaves on
// each hub, each leaf edge bought by the hub.
inline std::pair<OwnedGraph, GameConfig> fig1_fixture(int s) {
  if (s < 1) throw std::invalid_argument("fig1_fixture: s must be >= 1");
  const int n = 2 * s + 3;
  OwnedGraph g(n);
  for (int m = 2; m <= 4; ++m) {
    g.add_edge(m, 0, m);
    g.add_edge(m, 1, m);
  }
  int next = 5;
  for (int hub : {0, 1})
    for (int step = 0; step < s - 1; ++step) g.add_edge(hub, next++, hub);
  GameConfig cfg{make_rational(n - 3), n};
  return {g, cfg};
}

struct DynamicsResult {
  OwnedGraph graph;
  bool converged = false;
  int rounds = 0;
};

enum class DynamicsInit { Star, Path, Cycle, Random };

inline OwnedGraph dynamics_initial_graph(int n, DynamicsInit init,
                                         uint64_t seed) {
  OwnedGraph g(n);
  switch (init) {
    case DynamicsInit::Star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v, 0);
      break;
    case DynamicsInit::Path:
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, v);
      break;
    case DynamicsInit::Cycle:
      if (n < 3) throw std::invalid_argument("cycle init needs n >= 3");
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, v);
      break;
    case DynamicsInit::Random: {
      std::mt19937_64 rng(seed);
      for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng() % v);
        int owner = (rng() & 1) ? v : parent;
        g.add_edge(v, parent, owner);
      }
      // occasionally close a cycle or two
      int extra = static_cast<int>(rng() % 3);
      for (int e = 0; e < extra && n >= 3; ++e) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v, (rng() & 1) ? u : v);
      }
      break;
    }
  }
  return g;
}

// Round-robin best-response dynamics, deterministic given the seed.
inline DynamicsResult run_dynamics(const GameConfig& cfg, DynamicsInit init,
                                   uint64_t seed, int max_rounds,
                                   const DeviationMode& mode) {
  OwnedGraph g = dynamics_initial_graph(cfg.n, init, seed);
  DynamicsResult result;
  for (int round = 0; round < max_rounds; ++round) {
    bool improved = false;
    for (int i = 0; i < cfg.n; ++i) {
      auto incumbent = detail::owned_endpoints(g, i);
      auto incumbent_cost = detail::cost_with_strategy(g, i, incumbent, cfg);
      auto br = best_response(g, i, cfg, mode);
      if (!incumbent_cost || br.cost < *incumbent_cost) {
        std::erase_if(g.edges,
                      [&](const OwnedGraph::Edge& e) { return e.owner == i; });
        for (int t : br.endpoints)
          if (!g.has_edge(i, t)) g.edges.push_back({i, t, i});
        improved = true;
      }
    }
    result.rounds = round + 1;
    if (!improved) {
      result.converged = true;
      break;
    }
  }
  result.graph = g;
  return result;
}

// ---------------------------------------------------------------------------
// Unicyclic equilibrium feasibility
// ---------------------------------------------------------------------------

struct OneCycleResult {
  bool feasible = false;
  std::vector<int> witness_sizes;        // component sizes, when feasible
  std::vector<int> witness_owners;       // owner index per cycle edge
  std::string trace;                     // refutation trace otherwise
};

namespace detail {

// Distance change vector for the swap deviation on a bare k-cycle: the owner
// of edge {v_a, v_b} deletes it and buys the chord {v_a, v_target}.
// Entry m is (new distance - old distance) from v_a to v_m.
inline std::vector<int> cycle_swap_delta(int k, int a, int b, int target) {
  std::vector<std::vector<int>> adj(k);
  auto link = [&](int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  for (int m = 0; m < k; ++m) {
    int mn = (m + 1) % k;
    bool deleted = (m == a && mn == b) || (m == b && mn == a);
    if (!deleted) link(m, mn);
  }
  link(a, target);
  auto after = bfs_distances(adj, a);
  std::vector<int> delta(k);
  for (int m = 0; m < k; ++m) {
    int on_cycle = std::min((m - a + k) % k, (a - m + k) % k);
    delta[m] = after[m] - on_cycle;
  }
  return delta;
}

}  // namespace detail

// Decides whether positive component sizes s_0..s_{k-1} around a k-cycle can
// satisfy, for every cycle edge, the swap-stability inequality of at least one
// of its two possible owners. Brute force over {1..size_cap}^k; the
// implication-chain refutation answers k >= 6 directly.
inline OneCycleResult one_cycle_feasibility(int k, int size_cap,
                                            bool force_brute_force = false) {
  if (k < 3) throw std::invalid_argument("one_cycle_feasibility: k must be >= 3");
  if (size_cap < 1)
    throw std::invalid_argument("one_cycle_feasibility: size_cap must be >= 1");

  if (k >= 6 && !force_brute_force) {
    OneCycleResult r;
    r.feasible = false;
    std::ostringstream t;
    t << "refuted by implication chain: each swap-stability inequality "
         "s_i >= s_{i+1} + s_{i+2} forces s_{i+2} >= s_{i+3} + s_{i+4} "
         "(the alternative s_{i-1} + s_i <= s_{i+1} contradicts it); for k = "
      << k
      << " the chain wraps around the cycle and the resulting inequalities "
         "sum to a contradiction with positive sizes, and if no such "
         "inequality holds anywhere, all sizes must strictly increase around "
         "the cycle, which is also impossible";
    r.trace = t.str();
    return r;
  }

  // Precompute, per edge j = {v_j, v_{j+1}}, the two owners' delta vectors.
  // Owner v_j swaps to the chord {v_j, v_{j+2}}, owner v_{j+1} to the chord
  // {v_{j+1}, v_{j-1}}. On a triangle there is no valid chord target, so the
  // corresponding condition is vacuous.
  std::vector<std::optional<std::vector<int>>> delta_a(k), delta_b(k);
  for (int j = 0; j < k; ++j) {
    int jn = (j + 1) % k;
    int ta = (j + 2) % k;
    int tb = (j - 1 + k) % k;
    if (k > 3) {
      delta_a[j] = detail::cycle_swap_delta(k, j, jn, ta);
      delta_b[j] = detail::cycle_swap_delta(k, jn, j, tb);
    }
  }
  auto satisfied = [&](const std::optional<std::vector<int>>& delta,
                       const std::vector<int>& sizes) {
    if (!delta) return true;  // no deviation available, nothing to violate
    long total = 0;
    for (int m = 0; m < k; ++m) total += static_cast<long>((*delta)[m]) * sizes[m];
    return total >= 0;
  };

  std::vector<int> sizes(k, 1);
  while (true) {
    bool ok = true;
    std::vector<int> owners(k);
    for (int j = 0; j < k && ok; ++j) {
      if (satisfied(delta_a[j], sizes))
        owners[j] = j;
      else if (satisfied(delta_b[j], sizes))
        owners[j] = (j + 1) % k;
      else
        ok = false;
    }
    if (ok) {
      OneCycleResult r;
      r.feasible = true;
      r.witness_sizes = sizes;
      r.witness_owners = owners;
      return r;
    }
    int pos = k - 1;
    while (pos >= 0 && sizes[pos] == size_cap) sizes[pos--] = 1;
    if (pos < 0) break;
    sizes[pos]++;
  }
  OneCycleResult r;
  r.feasible = false;
  r.trace = "exhausted sizes in {1.." + std::to_string(size_cap) + "}^" +
            std::to_string(k) + " with no satisfying assignment";
  return r;
}

// One structural consequence check. A failed check means the graph cannot be
// a (coalitional) Nash equilibrium at this alpha if the corresponding lemma
// applies; a passing check claims nothing.
struct AuditCheck {
  bool pass = true;
  std::string witness;  // the concrete vertices/values behind the verdict
};

struct ComponentAudit {
  std::vector<int> vertices;
  Rational average_degree;
  std::optional<int> comp_girth;
  AuditCheck edge_pair;          // no opposing buys along a degree-2 stretch
  AuditCheck neighborhood_deg3;  // N_t(u) contains a degree->=3 vertex
  AuditCheck avg_degree_lower;   // average degree >= 2 + 1/(3t+1)
  AuditCheck avg_degree_upper;   // alpha > n: average degree <= 2 + 4n/(alpha-n)
  AuditCheck girth_bound;        // girth >= 2*alpha/n + 2
};

struct AuditReport {
  bool coalition = false;
  int radius = 5;  // neighborhood radius parameter t
  std::vector<ComponentAudit> components;
  bool all_pass = true;
};

// Structural audit of every non-trivial biconnected component against the
// known equilibrium consequences. radius < 0 picks the default neighborhood
// parameter: 3 in the coalition setting, else 5.
inline AuditReport audit(const OwnedGraph& g, const GameConfig& cfg,
                         bool coalition = false, int radius = -1) {
  cfg.validate();
  AuditReport report;
  report.coalition = coalition;
  report.radius = radius >= 0 ? radius : (coalition ? 3 : 5);
  auto decomposition = biconnected(g);
  for (const auto& comp : decomposition.components) {
    if (!comp.non_trivial) continue;
    ComponentAudit ca;
    ca.vertices = comp.vertices;
    const int h = static_cast<int>(comp.vertices.size());
    ca.average_degree = make_rational(2 * static_cast<long>(comp.edges.size()), h);

    // induced component as a standalone graph (local ids = rank in vertices)
    auto local = [&](int v) {
      return static_cast<int>(std::lower_bound(comp.vertices.begin(),
                                               comp.vertices.end(), v) -
                              comp.vertices.begin());
    };
    OwnedGraph sub(h);
    for (auto [a, b] : comp.edges)
      sub.add_edge(local(a), local(b), g.edge_owner(a, b) == a ? local(a)
                                                               : local(b));
    auto dist = all_distances(sub);
    std::vector<int> deg(h, 0);
    for (const auto& e : sub.edges) {
      deg[e.u]++;
      deg[e.v]++;
    }
    ca.comp_girth = girth(sub);

    // (a) pair condition: u buys toward v and v buys toward u on a common
    // shortest path, both inner neighbors of degree 2
    for (int u = 0; u < h && ca.edge_pair.pass; ++u)
      for (int v = 0; v < h && ca.edge_pair.pass; ++v) {
        int duv = dist(u, v);
        if (duv < 3) continue;
        for (const auto& e : sub.edges) {
          int x = -1;
          if (e.owner == u && (e.u == u || e.v == u)) x = e.u == u ? e.v : e.u;
          if (x == -1 || dist(x, v) != duv - 1 || deg[x] >= 3) continue;
          for (const auto& f : sub.edges) {
            int y = -1;
            if (f.owner == v && (f.u == v || f.v == v)) y = f.u == v ? f.v : f.u;
            if (y == -1 || dist(u, y) != duv - 1 || deg[y] >= 3) continue;
            if (dist(x, y) != duv - 2) continue;  // not on a common path
            ca.edge_pair.pass = false;
            ca.edge_pair.witness =
                "vertices " + std::to_string(comp.vertices[u]) + " and " +
                std::to_string(comp.vertices[v]) +
                " buy toward each other via degree-2 vertices " +
                std::to_string(comp.vertices[x]) + " and " +
                std::to_string(comp.vertices[y]);
            break;
          }
          if (!ca.edge_pair.pass) break;
        }
      }
    if (ca.edge_pair.pass) ca.edge_pair.witness = "no opposing pair found";

    // (b) every N_t(u) contains a vertex of degree >= 3
    for (int u = 0; u < h; ++u) {
      bool found = false;
      for (int w = 0; w < h; ++w)
        if (dist(u, w) <= report.radius && deg[w] >= 3) {
          found = true;
          break;
        }
      if (!found) {
        ca.neighborhood_deg3.pass = false;
        ca.neighborhood_deg3.witness =
            "N_" + std::to_string(report.radius) + "(" +
            std::to_string(comp.vertices[u]) + ") has maximum degree 2";
        break;
      }
    }
    if (ca.neighborhood_deg3.pass)
      ca.neighborhood_deg3.witness =
          "every N_" + std::to_string(report.radius) +
          " neighborhood contains a degree->=3 vertex";

    // (c) average degree >= 2 + 1/(3t+1)
    Rational lower = 2 + make_rational(1, 3 * report.radius + 1);
    ca.avg_degree_lower.pass = ca.average_degree >= lower;
    ca.avg_degree_lower.witness = "average degree " +
                                  rational_to_string(ca.average_degree) +
                                  " vs lower bound " + rational_to_string(lower);

    // (d) alpha > n: average degree <= 2 + 4n/(alpha - n)
    if (cfg.alpha > cfg.n) {
      Rational upper = 2 + 4 * cfg.n / (cfg.alpha - cfg.n);
      ca.avg_degree_upper.pass = ca.average_degree <= upper;
      ca.avg_degree_upper.witness = "average degree " +
                                    rational_to_string(ca.average_degree) +
                                    " vs upper bound " +
                                    rational_to_string(upper);
    } else {
      ca.avg_degree_upper.witness = "not applicable (alpha <= n)";
    }

    // (e) girth >= 2*alpha/n + 2
    Rational min_girth = theorem1_min_girth(cfg);
    ca.girth_bound.pass = !ca.comp_girth || *ca.comp_girth >= min_girth;
    ca.girth_bound.witness =
        (ca.comp_girth ? "girth " + std::to_string(*ca.comp_girth) : "acyclic") +
        " vs bound " + rational_to_string(min_girth);

    report.all_pass = report.all_pass && ca.edge_pair.pass &&
                      ca.neighborhood_deg3.pass && ca.avg_degree_lower.pass &&
                      ca.avg_degree_upper.pass && ca.girth_bound.pass;
    report.components.push_back(std::move(ca));
  }
  return report;
}

}  // namespace ncg

#endif  // NCG_EQUILIBRIUM_HPP
