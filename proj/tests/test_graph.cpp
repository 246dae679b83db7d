#include <doctest.h>

#include <random>
#include <set>

#include "ncg/graph.hpp"
#include "ncg/json_io.hpp"

using namespace ncg;

namespace {

OwnedGraph cycle_graph(int n) {
  OwnedGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, v);
  return g;
}

OwnedGraph random_connected(std::mt19937_64& rng, int n, int extra_edges) {
  OwnedGraph g(n);
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % v);
    g.add_edge(v, parent, (rng() & 1) ? v : parent);
  }
  for (int e = 0; e < extra_edges; ++e) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v, (rng() & 1) ? u : v);
  }
  return g;
}

// girth oracle: shortest cycle through every vertex by BFS that forbids
// reusing the first edge
int brute_girth(const OwnedGraph& g) {
  int best = -1;
  auto adj = g.adjacency();
  // For every edge {u,v}: shortest u-v path avoiding that edge, plus the edge.
  for (const auto& e : g.edges) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{e.u};
    dist[e.u] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (int w : adj[x]) {
        if ((x == e.u && w == e.v) || (x == e.v && w == e.u)) continue;
        if (dist[w] == -1) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[e.v] != -1 && (best == -1 || dist[e.v] + 1 < best))
      best = dist[e.v] + 1;
  }
  return best;
}

// articulation oracle: v is an articulation point iff removing it increases
// the number of connected components among the remaining vertices
bool is_articulation(const OwnedGraph& g, int v) {
  auto adj = g.adjacency();
  auto components = [&](int skip) {
    std::vector<int> comp(g.n, -1);
    int k = 0;
    for (int s = 0; s < g.n; ++s) {
      if (s == skip || comp[s] != -1) continue;
      comp[s] = k;
      std::vector<int> queue{s};
      for (size_t h = 0; h < queue.size(); ++h)
        for (int w : adj[queue[h]])
          if (w != skip && comp[w] == -1) {
            comp[w] = k;
            queue.push_back(w);
          }
      ++k;
    }
    return k;
  };
  return components(v) > components(-1);
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("owned graph validation") {
  OwnedGraph g(3);
  g.add_edge(0, 1, 0);
  CHECK_THROWS_AS(g.add_edge(0, 1, 1), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(1, 1, 1), std::invalid_argument);  // self-loop
  CHECK_THROWS_AS(g.add_edge(1, 2, 0), std::invalid_argument);  // bad owner
  CHECK_THROWS_AS(g.add_edge(1, 3, 1), std::invalid_argument);  // out of range
  CHECK(g.edge_owner(1, 0) == 0);
  CHECK(g.edge_owner(1, 2) == -1);
}

TEST_CASE("all_distances basics") {
  OwnedGraph path(3);
  path.add_edge(0, 1, 0);
  path.add_edge(1, 2, 1);
  auto t = all_distances(path);
  CHECK(t(0, 2) == 2);
  CHECK(t(2, 0) == 2);

  auto c5 = cycle_graph(5);
  CHECK(all_distances(c5)(0, 2) == 2);

  OwnedGraph iso(2);
  CHECK(all_distances(iso)(0, 1) == kUnreachable);
}

TEST_CASE("distance table symmetric with triangle inequality") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    int n = 3 + static_cast<int>(rng() % 8);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 4));
    auto t = all_distances(g);
    for (int i = 0; i < n; ++i) {
      CHECK(t(i, i) == 0);
      for (int j = 0; j < n; ++j) {
        CHECK(t(i, j) == t(j, i));
        for (int k = 0; k < n; ++k) CHECK(t(i, j) <= t(i, k) + t(k, j));
      }
    }
  }
}

TEST_CASE("player_cost on stars") {
  OwnedGraph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v, 0);
  GameConfig cfg{make_rational(2), 5};
  CHECK(*player_cost(star, 0, cfg) == 12);  // 4*2 + 4
  CHECK(*player_cost(star, 1, cfg) == 7);   // 0 + 1 + 3*2

  OwnedGraph disc(3);
  disc.add_edge(0, 1, 0);
  CHECK(!player_cost(disc, 0, {make_rational(1), 3}).has_value());
}

TEST_CASE("social_cost examples") {
  OwnedGraph path(3);
  path.add_edge(0, 1, 0);
  path.add_edge(1, 2, 1);
  CHECK(*social_cost(path, {make_rational(1), 3}) == 10);

  OwnedGraph single(1);
  CHECK(*social_cost(single, {make_rational(1), 1}) == 0);

  OwnedGraph tri = cycle_graph(3);
  CHECK(*social_cost(tri, {make_rational(1), 3}) == 9);
}

TEST_CASE("social_cost equals sum of player costs and ignores ownership") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 4));
    GameConfig cfg{make_rational(1 + static_cast<long>(rng() % 7),
                                 1 + static_cast<long>(rng() % 3)),
                   n};
    Rational total = 0;
    for (int i = 0; i < n; ++i) total += *player_cost(g, i, cfg);
    CHECK(total == *social_cost(g, cfg));

    OwnedGraph flipped = g;
    for (auto& e : flipped.edges) e.owner = e.owner == e.u ? e.v : e.u;
    CHECK(*social_cost(flipped, cfg) == *social_cost(g, cfg));
  }
}

TEST_CASE("shortest_cycle examples") {
  OwnedGraph tree(4);
  tree.add_edge(0, 1, 0);
  tree.add_edge(1, 2, 1);
  tree.add_edge(1, 3, 1);
  CHECK(!shortest_cycle(tree).has_value());
  CHECK(!girth(tree).has_value());

  CHECK(*girth(cycle_graph(5)) == 5);

  auto chorded = cycle_graph(5);
  chorded.add_edge(0, 2, 0);
  CHECK(*girth(chorded) == 3);
}

TEST_CASE("girth matches brute oracle and cycle distances are graph distances") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    int n = 3 + static_cast<int>(rng() % 10);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 5));
    auto cyc = shortest_cycle(g);
    int oracle = brute_girth(g);
    if (oracle == -1) {
      CHECK(!cyc.has_value());
      continue;
    }
    REQUIRE(cyc.has_value());
    int c = static_cast<int>(cyc->size());
    CHECK(c == oracle);
    auto t = all_distances(g);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) {
        int on_cycle = std::min((j - i + c) % c, (i - j + c) % c);
        CHECK(t((*cyc)[i], (*cyc)[j]) == on_cycle);
      }
  }
}

TEST_CASE("biconnected examples") {
  OwnedGraph tree(4);
  tree.add_edge(0, 1, 0);
  tree.add_edge(1, 2, 1);
  tree.add_edge(1, 3, 1);
  auto d = biconnected(tree);
  for (const auto& comp : d.components) CHECK(!comp.non_trivial);

  // 6-cycle with a pendant path of length 2 at vertex 0
  OwnedGraph g(8);
  for (int v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6, v);
  g.add_edge(0, 6, 0);
  g.add_edge(6, 7, 6);
  auto d2 = biconnected(g);
  int non_trivial = 0;
  for (const auto& comp : d2.components) {
    if (!comp.non_trivial) continue;
    ++non_trivial;
    CHECK(comp.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    for (size_t k = 0; k < comp.vertices.size(); ++k) {
      if (comp.vertices[k] == 0)
        CHECK(comp.satellites[k].size() == 2);
      else
        CHECK(comp.satellites[k].empty());
    }
  }
  CHECK(non_trivial == 1);

  // two triangles sharing vertex 0
  OwnedGraph two(5);
  two.add_edge(0, 1, 0);
  two.add_edge(1, 2, 1);
  two.add_edge(2, 0, 2);
  two.add_edge(0, 3, 0);
  two.add_edge(3, 4, 3);
  two.add_edge(4, 0, 4);
  auto d3 = biconnected(two);
  int nt = 0;
  for (const auto& comp : d3.components) nt += comp.non_trivial;
  CHECK(nt == 2);
  CHECK(d3.articulation_points == std::vector<int>{0});
}

TEST_CASE("articulation points match the vertex-removal oracle") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    int n = 3 + static_cast<int>(rng() % 9);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 4));
    auto d = biconnected(g);
    std::set<int> reported(d.articulation_points.begin(),
                           d.articulation_points.end());
    for (int v = 0; v < n; ++v)
      CHECK(reported.count(v) == static_cast<size_t>(is_articulation(g, v)));
    // every edge in exactly one component
    size_t edge_total = 0;
    for (const auto& comp : d.components) edge_total += comp.edges.size();
    CHECK(edge_total == g.edges.size());
  }
}

TEST_CASE("theorem1_min_girth formula") {
  CHECK(theorem1_min_girth({make_rational(6), 6}) == 4);       // alpha = n
  CHECK(theorem1_min_girth({make_rational(9), 6}) == 5);       // alpha = 3n/2
  CHECK(theorem1_min_girth({make_rational(3), 6}) == 3);       // alpha = n/2
  CHECK(theorem1_min_girth({make_rational(191, 185), 1}) ==
        make_rational(752, 185));
}

TEST_CASE("graph json round trip and diagnostics") {
  auto g = cycle_graph(4);
  auto j = graph_to_json(g);
  auto back = graph_from_json(j);
  CHECK(back.n == 4);
  CHECK(back.edges.size() == 4);
  CHECK(back.edge_owner(0, 1) == 0);

  CHECK_THROWS_AS(graph_from_json(Json::parse("[]")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2})")), ParseError);
  auto error_of = [](const char* text) {
    try {
      graph_from_json(Json::parse(text));
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of(R"({"n": 2, "edges": [[0, 1]]})").find("edges[0]") !=
        std::string::npos);
  CHECK(error_of(R"({"n": 2, "edges": [[0,1,0],[0,2,0]]})").find("edges[1]") !=
        std::string::npos);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("191/185") == make_rational(191, 185));
  CHECK(parse_rational("1.25") == make_rational(5, 4));
  CHECK(parse_rational("-3") == -3);
  CHECK(rational_to_string(make_rational(4, 2)) == "2");
  CHECK(rational_to_string(make_rational(-191, 185)) == "-191/185");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_SUITE_END();
