#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semimono/graph.hpp"
#include "semimono/lab.hpp"

using namespace semimono;

TEST_CASE("edge list parsing") {
  SUBCASE("path graph") {
    Graph g = Graph::from_edge_list("a b\nb c");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
  }
  SUBCASE("self-loop rejected with line number") {
    CHECK_THROWS_WITH_AS(Graph::from_edge_list("a a"), doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list("a b\nc c"), doctest::Contains("line 2"), Error);
  }
  SUBCASE("duplicate edges collapse silently") {
    Graph g = Graph::from_edge_list("a b\na b");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(Graph::from_edge_list("a b\nb a").edge_count() == 1);
  }
  SUBCASE("comments and blank lines ignored") {
    Graph g = Graph::from_edge_list("# header\n\na b\n  \n# trailing\nb c\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("empty document rejected") {
    CHECK_THROWS_AS(Graph::from_edge_list(""), Error);
    CHECK_THROWS_AS(Graph::from_edge_list("# only comments\n"), Error);
  }
  SUBCASE("wrong token count rejected") {
    CHECK_THROWS_AS(Graph::from_edge_list("a b c"), Error);
    CHECK_THROWS_AS(Graph::from_edge_list("a"), Error);
  }
  SUBCASE("labels map to dense ids in first-seen order") {
    Graph g = Graph::from_edge_list("m n\nn o\no m");
    CHECK(g.find_label("m") == 0);
    CHECK(g.find_label("n") == 1);
    CHECK(g.find_label("o") == 2);
    CHECK(!g.find_label("q").has_value());
  }
}

TEST_CASE("add_edge") {
  Graph path = Graph::from_edge_list("a b\nb c");
  SUBCASE("produces a new graph, original unchanged") {
    Graph g2 = path.add_edge(0, 2);
    CHECK(g2.edge_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(g2.has_edge(0, 2));
    CHECK(!path.has_edge(0, 2));
  }
  SUBCASE("new endpoints are at distance 1") {
    Graph g2 = path.add_edge(0, 2);
    CHECK(bfs_distances(g2, 0)[2] == 1);
  }
  SUBCASE("coinciding endpoints rejected") { CHECK_THROWS_AS(path.add_edge(1, 1), Error); }
  SUBCASE("existing edge of a triangle rejected") {
    Graph triangle = Graph::from_edge_list("a b\nb c\nc a");
    CHECK_THROWS_AS(triangle.add_edge(0, 1), Error);
  }
}

TEST_CASE("bfs distances") {
  SUBCASE("path") {
    Graph g = Graph::from_edge_list("a b\nb c");
    auto dist = bfs_distances(g, 0);
    CHECK(dist[0] == 0);
    CHECK(dist[1] == 1);
    CHECK(dist[2] == 2);
  }
  SUBCASE("star center reaches everything in one hop") {
    Graph g = Graph::from_edge_list("hub a\nhub b\nhub c\nhub d");
    auto dist = bfs_distances(g, 0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) CHECK(dist[v] == 1);
  }
  SUBCASE("unreachable vertices get the explicit variant") {
    Graph g = Graph::from_edge_list("a b\nc d");
    auto dist = bfs_distances(g, 0);
    CHECK(dist[1] == 1);
    CHECK(!dist[2].has_value());
    CHECK(!dist[3].has_value());
  }
}

TEST_CASE("all_pairs distances and geodesic counts") {
  SUBCASE("4-cycle opposite corners") {
    Graph g = Graph::from_edge_list("a b\nb c\nc d\nd a");
    auto ap = all_pairs(g);
    CHECK(ap.dist(0, 2) == 2);
    CHECK(ap.sigma(0, 2) == 2);
    CHECK(ap.dist(1, 3) == 2);
    CHECK(ap.sigma(1, 3) == 2);
  }
  SUBCASE("path has a single geodesic") {
    Graph g = Graph::from_edge_list("a b\nb c");
    auto ap = all_pairs(g);
    CHECK(ap.sigma(0, 2) == 1);
  }
  SUBCASE("complete graph K4") {
    Graph g = Graph::from_edge_list("a b\na c\na d\nb c\nb d\nc d");
    auto ap = all_pairs(g);
    for (Vertex u = 0; u < 4; ++u) {
      for (Vertex v = 0; v < 4; ++v) {
        if (u == v) {
          CHECK(ap.dist(u, v) == 0);
          CHECK(ap.sigma(u, v) == 1);
        } else {
          CHECK(ap.dist(u, v) == 1);
          CHECK(ap.sigma(u, v) == 1);
        }
      }
    }
  }
}

TEST_CASE("is_connected") {
  CHECK(Graph::from_edge_list("a b\nb c").is_connected());
  CHECK(!Graph::from_edge_list("a b\nc d").is_connected());
  CHECK(Graph::from_edges(1, {}).is_connected());
}

TEST_CASE("ego_is_clique") {
  SUBCASE("leaf of a star") {
    Graph g = Graph::from_edge_list("hub a\nhub b");
    CHECK(g.ego_is_clique(1));
    CHECK(!g.ego_is_clique(0));
  }
  SUBCASE("center of a path") {
    Graph g = Graph::from_edge_list("a b\nb c");
    CHECK(!g.ego_is_clique(1));
    CHECK(g.ego_is_clique(0));
  }
  SUBCASE("triangle vertex") {
    Graph g = Graph::from_edge_list("a b\nb c\nc a");
    CHECK(g.ego_is_clique(0));
  }
}

TEST_CASE("round trip through edge list text") {
  Graph g = Graph::from_edge_list("a b\nb c\nc a\nc d");
  Graph h = Graph::from_edge_list(g.to_edge_list());
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.edges() == g.edges());
}

// Property sweeps over seeded random graphs.
TEST_CASE("bfs symmetry and path count consistency on random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_connected_graph(3 + static_cast<int>(seed % 10), 0.4, seed);
    const int n = g.vertex_count();
    auto ap = all_pairs(g);

    for (Vertex s = 0; s < n; ++s) {
      auto row = bfs_distances(g, s);
      for (Vertex t = 0; t < n; ++t) {
        CHECK(row[t] == ap.dist(s, t));
        CHECK(ap.dist(s, t) == ap.dist(t, s));
        CHECK(ap.sigma(s, t) == ap.sigma(t, s));
      }
    }

    // sigma recurrence: sigma(i,j) accumulates over j's neighbors one hop closer to i.
    for (Vertex i = 0; i < n; ++i) {
      CHECK(ap.sigma(i, i) == 1);
      for (Vertex j = 0; j < n; ++j) {
        if (i == j || !ap.dist(i, j)) continue;
        CHECK(ap.sigma(i, j) >= 1);
        BigInt total = 0;
        for (Vertex v : g.neighbors(j)) {
          if (ap.dist(i, v) && *ap.dist(i, v) == *ap.dist(i, j) - 1) total += ap.sigma(i, v);
        }
        CHECK(ap.sigma(i, j) == total);
      }
    }

    // triangle inequality on finite triples
    for (Vertex u = 0; u < n; ++u)
      for (Vertex x = 0; x < n; ++x)
        for (Vertex z = 0; z < n; ++z) CHECK(*ap.dist(u, z) <= *ap.dist(u, x) + *ap.dist(x, z));
  }
}

TEST_CASE("add_edge never increases any distance") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    Graph g = random_connected_graph(8, 0.3, seed);
    auto before = all_pairs(g);
    // first non-adjacent pair, if any
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
        if (g.has_edge(x, y)) continue;
        auto after = all_pairs(g.add_edge(x, y));
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(*after.dist(u, v) <= *before.dist(u, v));
        goto next_seed;
      }
    }
  next_seed:;
  }
}
