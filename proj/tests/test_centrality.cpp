#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semimono/centrality.hpp"
#include "semimono/families.hpp"
#include "semimono/lab.hpp"

using namespace semimono;

namespace {

Graph path3() { return Graph::from_edge_list("a b\nb c"); }

Graph cycle4() { return Graph::from_edge_list("a b\nb c\nc d\nd a"); }

Graph complete4() { return Graph::from_edge_list("a b\na c\na d\nb c\nb d\nc d"); }

}  // namespace

TEST_CASE("closeness") {
  SUBCASE("path a-b-c") {
    auto scores = closeness(path3());
    CHECK(scores.peripheralities == std::vector<BigInt>{3, 2, 3});
    CHECK(scores.scores[0] == make_rational(1, 3));
    CHECK(scores.scores[1] == make_rational(1, 2));
    CHECK(scores.scores[2] == make_rational(1, 3));
  }
  SUBCASE("counterexample family at k=10, before and after the edge") {
    auto family = build_closeness_counterexample(10);
    auto before = closeness(family.graph);
    CHECK(before.peripheralities[family.x] == 81);
    CHECK(before.peripheralities[family.u] == 81);
    CHECK(before.peripheralities[family.y] == 81);

    auto after = closeness(family.graph.add_edge(family.x, family.y));
    CHECK(after.peripheralities[family.x] == 70);
    CHECK(after.peripheralities[family.u] == 70);
    CHECK(after.peripheralities[family.y] == 78);
  }
  SUBCASE("disconnected graph is rejected naming an unreachable pair") {
    Graph g = Graph::from_edge_list("a b\nc d");
    CHECK_THROWS_WITH_AS(closeness(g), doctest::Contains("cannot reach"), Error);
  }
  SUBCASE("single vertex scores zero") {
    auto scores = closeness(Graph::from_edges(1, {}));
    CHECK(scores.scores[0] == 0);
    CHECK(scores.peripheralities[0] == 0);
  }
  SUBCASE("scores are reciprocal peripheralities") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph g = random_connected_graph(9, 0.35, seed);
      auto scores = closeness(g);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        CHECK(scores.scores[v] * Rational(scores.peripheralities[v]) == 1);
      }
    }
  }
}

TEST_CASE("harmonic") {
  SUBCASE("path a-b-c") {
    auto scores = harmonic(path3());
    CHECK(scores.scores[1] == 2);
    CHECK(scores.scores[0] == make_rational(3, 2));
    CHECK(scores.scores[2] == make_rational(3, 2));
  }
  SUBCASE("unreachable pairs contribute zero") {
    auto scores = harmonic(Graph::from_edges(2, {}));
    CHECK(scores.scores[0] == 0);
    CHECK(scores.scores[1] == 0);
    CHECK(harmonic(Graph::from_edges(1, {})).scores[0] == 0);
  }
  SUBCASE("K4") {
    auto scores = harmonic(complete4());
    for (Vertex v = 0; v < 4; ++v) CHECK(scores.scores[v] == 3);
  }
}

TEST_CASE("betweenness") {
  SUBCASE("path a-b-c") {
    auto scores = betweenness(path3());
    CHECK(scores.scores[0] == 0);
    CHECK(scores.scores[1] == 1);
    CHECK(scores.scores[2] == 0);
  }
  SUBCASE("counterexample family: x,y,u stay at zero through the addition") {
    auto family = build_betweenness_counterexample(4);
    auto before = betweenness(family.graph);
    CHECK(before.scores[family.x] == 0);
    CHECK(before.scores[family.y] == 0);
    CHECK(before.scores[family.u] == 0);
    auto after = betweenness(family.graph.add_edge(family.x, family.y));
    CHECK(after.scores[family.x] == 0);
    CHECK(after.scores[family.y] == 0);
    CHECK(after.scores[family.u] == 0);
  }
  SUBCASE("4-cycle: 1/2 everywhere, matching the enumeration oracle") {
    auto scores = betweenness(cycle4());
    auto oracle = naive_betweenness_oracle(cycle4());
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(scores.scores[v] == make_rational(1, 2));
      CHECK(oracle.scores[v] == make_rational(1, 2));
    }
  }
  SUBCASE("disconnected components accumulate independently") {
    auto scores = betweenness(Graph::from_edge_list("a b\nb c\nd e\ne f"));
    CHECK(scores.scores == std::vector<Rational>{Rational(0), Rational(1), Rational(0),
                                                 Rational(0), Rational(1), Rational(0)});
  }
}

TEST_CASE("pair_dependency") {
  SUBCASE("path: b carries the whole a-c pair") {
    CHECK(pair_dependency(path3(), 1, 0, 2) == 1);
  }
  SUBCASE("4-cycle: each middle vertex carries half of an opposite pair") {
    CHECK(pair_dependency(cycle4(), 1, 0, 2) == make_rational(1, 2));
    CHECK(pair_dependency(cycle4(), 3, 0, 2) == make_rational(1, 2));
  }
  SUBCASE("off-geodesic vertices contribute zero") {
    // d(a,u) + d(u,c) > d(a,c) for the pendant vertex u.
    Graph g = Graph::from_edge_list("a b\nb c\nb u");
    CHECK(pair_dependency(g, 3, 0, 2) == 0);
  }
  SUBCASE("precondition violations") {
    CHECK_THROWS_AS(pair_dependency(path3(), 1, 0, 0), Error);
    CHECK_THROWS_AS(pair_dependency(path3(), 0, 0, 2), Error);
    Graph g = Graph::from_edge_list("a b\nc d");
    CHECK_THROWS_AS(pair_dependency(g, 1, 0, 2), Error);
  }
}

TEST_CASE("betweenness equals the sum of pair dependencies") {
  SUBCASE("every connected graph up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
      enumerate_connected_graphs(n, [&](const Graph& g) {
        auto ap = all_pairs(g);
        auto scores = betweenness(g);
        for (Vertex u = 0; u < n; ++u) {
          Rational total = 0;
          for (Vertex i = 0; i < n; ++i) {
            if (i == u) continue;
            for (Vertex j = i + 1; j < n; ++j) {
              if (j == u) continue;
              total += pair_dependency(ap, u, i, j);
            }
          }
          CHECK(scores.scores[u] == total);
        }
      });
    }
  }
  SUBCASE("seeded random graphs") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
      Graph g = random_connected_graph(8, 0.35, seed);
      auto ap = all_pairs(g);
      auto scores = betweenness(g);
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        Rational total = 0;
        for (Vertex i = 0; i < g.vertex_count(); ++i) {
          if (i == u) continue;
          for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
            if (j == u) continue;
            total += pair_dependency(ap, u, i, j);
          }
        }
        CHECK(scores.scores[u] == total);
      }
    }
  }
}

TEST_CASE("zero betweenness coincides with clique ego networks") {
  // Exhaustive at small n here; n=6 runs in the acceptance sweep and n=7
  // behind the sweep flag.
  for (int n = 1; n <= 5; ++n) {
    enumerate_connected_graphs(n, [&](const Graph& g) {
      auto scores = betweenness(g);
      for (Vertex u = 0; u < n; ++u) {
        CHECK((scores.scores[u] == 0) == g.ego_is_clique(u));
      }
    });
  }
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    Graph g = random_connected_graph(7, 0.4, seed);
    auto scores = betweenness(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      CHECK((scores.scores[u] == 0) == g.ego_is_clique(u));
    }
  }
}

TEST_CASE("score movement at the endpoints of a new edge") {
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    Graph g = random_connected_graph(10, 0.3, seed);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
        if (g.has_edge(x, y)) continue;
        Graph gp = g.add_edge(x, y);

        auto p_before = closeness(g).peripheralities;
        auto p_after = closeness(gp).peripheralities;
        CHECK(p_after[x] < p_before[x]);
        CHECK(p_after[y] < p_before[y]);

        auto h_before = harmonic(g).scores;
        auto h_after = harmonic(gp).scores;
        CHECK(h_after[x] > h_before[x]);
        CHECK(h_after[y] > h_before[y]);

        auto b_before = betweenness(g).scores;
        auto b_after = betweenness(gp).scores;
        CHECK(b_after[x] >= b_before[x]);
        CHECK(b_after[y] >= b_before[y]);
      }
    }
  }
}
