#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "semimono/families.hpp"
#include "semimono/lab.hpp"
#include "semimono/report.hpp"

using namespace semimono;

namespace {

const CheckTally& find_row(const SweepReport& report, CheckId check, Kind kind) {
  for (const CheckTally& row : report.rows) {
    if (row.check == check && row.centrality == kind) return row;
  }
  REQUIRE(false);
  throw Error("row not found");
}

}  // namespace

TEST_CASE("connected graph enumeration counts") {
  CHECK(count_connected_graphs(1) == 1);
  CHECK(count_connected_graphs(2) == 1);
  CHECK(count_connected_graphs(3) == 4);
  CHECK(count_connected_graphs(4) == 38);
  CHECK(count_connected_graphs(5) == 728);
  CHECK_THROWS_AS(count_connected_graphs(0), Error);
  CHECK_THROWS_AS(count_connected_graphs(8), Error);

  std::uint64_t streamed = 0;
  enumerate_connected_graphs(4, [&](const Graph& g) {
    ++streamed;
    CHECK(g.is_connected());
    CHECK(g.vertex_count() == 4);
  });
  CHECK(streamed == 38);
}

TEST_CASE("random connected graphs") {
  SUBCASE("same parameters give identical edge sets") {
    Graph a = random_connected_graph(12, 0.3, 99);
    Graph b = random_connected_graph(12, 0.3, 99);
    CHECK(a.edges() == b.edges());
    Graph c = random_connected_graph(12, 0.3, 100);
    CHECK(a.edges() != c.edges());
  }
  SUBCASE("p=1 yields the complete graph") {
    Graph g = random_connected_graph(6, 1.0, 7);
    CHECK(g.edge_count() == 15);
  }
  SUBCASE("n=1 accepted immediately") {
    CHECK(random_connected_graph(1, 0.5, 3).vertex_count() == 1);
  }
  SUBCASE("hopeless parameters error out after bounded rejections") {
    CHECK_THROWS_WITH_AS(random_connected_graph(40, 0.001, 5), doctest::Contains("larger p"),
                         Error);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(random_connected_graph(0, 0.5, 1), Error);
    CHECK_THROWS_AS(random_connected_graph(5, 0.0, 1), Error);
    CHECK_THROWS_AS(random_connected_graph(5, 1.5, 1), Error);
  }
}

TEST_CASE("naive betweenness oracle") {
  SUBCASE("path a-b-c") {
    auto scores = naive_betweenness_oracle(Graph::from_edge_list("a b\nb c"));
    CHECK(scores.scores == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
  }
  SUBCASE("shared-clique family m=4 zeroes the apexes") {
    auto family = build_betweenness_counterexample(4);
    auto scores = naive_betweenness_oracle(family.graph);
    CHECK(scores.scores[family.x] == 0);
    CHECK(scores.scores[family.y] == 0);
    CHECK(scores.scores[family.u] == 0);
  }
  SUBCASE("4-cycle: 1/2 everywhere") {
    auto scores = naive_betweenness_oracle(Graph::from_edge_list("a b\nb c\nc d\nd a"));
    for (const Rational& value : scores.scores) CHECK(value == make_rational(1, 2));
  }
  SUBCASE("size guard") {
    Graph big = random_connected_graph(13, 0.5, 1);
    CHECK_THROWS_AS(naive_betweenness_oracle(big), Error);
    CHECK_NOTHROW(naive_betweenness_oracle(big, 13));
  }
}

TEST_CASE("oracle equivalence with Brandes accumulation") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_connected_graphs(n, [&](const Graph& g) {
      auto fast = betweenness(g);
      auto slow = naive_betweenness_oracle(g);
      CHECK(fast.scores == slow.scores);
    });
  }
  for (std::uint64_t seed = 500; seed < 510; ++seed) {
    Graph g = random_connected_graph(10, 0.3, seed);
    CHECK(betweenness(g).scores == naive_betweenness_oracle(g).scores);
  }
}

TEST_CASE("pointwise inequalities") {
  SUBCASE("path scenario from the worked example") {
    Scenario s(Graph::from_edge_list("a b\nb c"), 0, 2);
    CHECK(verify_pointwise_inequalities(s).empty());
    // The strict case lands at z=y for the one non-degenerate basin member:
    // 1/d'(b,c) - 1/d(b,c) = 0 strictly below 1/d'(a,c) - 1/d(a,c) = 1/2.
    const auto& after = s.after_pairs().dist;
    CHECK(*after(0, 2) == 1);
    CHECK(make_rational(1, *after(1, 2)) - make_rational(1, 1) <
          make_rational(1, *after(0, 2)) - make_rational(1, 2));
  }
  SUBCASE("closeness family k=10 satisfies every inequality despite the ties") {
    auto family = build_closeness_counterexample(10);
    Scenario s(family.graph, family.x, family.y);
    CHECK(verify_pointwise_inequalities(s).empty());
  }
  SUBCASE("holds exhaustively to n=5") {
    for (int n = 3; n <= 5; ++n) {
      enumerate_connected_graphs(n, [&](const Graph& g) {
        auto base = std::make_shared<const GraphAnalysis>(g);
        for (Vertex x = 0; x < n; ++x) {
          for (Vertex y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            CHECK(verify_pointwise_inequalities(Scenario(base, x, y)).empty());
          }
        }
      });
    }
  }
}

TEST_CASE("check name round trips") {
  for (CheckId check : kAllChecks) {
    CHECK(check_from_name(check_name(check)) == check);
  }
  CHECK(!check_from_name("no_such_check").has_value());
}

TEST_CASE("sweep over all connected graphs up to n=5") {
  SweepConfig cfg;
  cfg.source = EnumerateSource{5};
  SweepReport report = run_sweep(cfg);

  CHECK(report.graphs_generated == 1 + 1 + 4 + 38 + 728);

  // The positive results report zero failures.
  CHECK(find_row(report, CheckId::RankSemi, Kind::Closeness).fails == 0);
  CHECK(find_row(report, CheckId::RankSemi, Kind::Betweenness).fails == 0);
  CHECK(find_row(report, CheckId::StrictRankSemi, Kind::Harmonic).fails == 0);
  CHECK(find_row(report, CheckId::Dominance, Kind::Closeness).fails == 0);
  CHECK(find_row(report, CheckId::Dominance, Kind::Betweenness).fails == 0);
  CHECK(find_row(report, CheckId::StrictDominance, Kind::Harmonic).fails == 0);
  CHECK(find_row(report, CheckId::PeripheralityIdentity, Kind::Closeness).fails == 0);
  CHECK(find_row(report, CheckId::CliqueLemma, Kind::Betweenness).fails == 0);
  for (Kind kind : kAllKinds) {
    CHECK(find_row(report, CheckId::PointwiseIneqs, kind).fails == 0);
    CHECK(find_row(report, CheckId::ImplicationStrictDominance, kind).fails == 0);
    CHECK(find_row(report, CheckId::ImplicationDominance, kind).fails == 0);
    CHECK(find_row(report, CheckId::ScoreSemi, kind).scenarios ==
          find_row(report, CheckId::ScoreSemi, kind).holds +
              find_row(report, CheckId::ScoreSemi, kind).fails);
  }

  // Geometric measures never fail score semi-monotonicity.
  CHECK(find_row(report, CheckId::ScoreSemi, Kind::Closeness).fails == 0);
  CHECK(find_row(report, CheckId::ScoreSemi, Kind::Harmonic).fails == 0);

  // The m=2 shared-clique member lives at n=5, so betweenness score
  // semi-monotonicity must fail at least once and carry an exemplar.
  const auto& score_row = find_row(report, CheckId::ScoreSemi, Kind::Betweenness);
  CHECK(score_row.fails >= 1);
  REQUIRE(score_row.exemplar.has_value());
  Graph exemplar = Graph::from_edge_list(score_row.exemplar->edge_list);
  CHECK(exemplar.vertex_count() <= 5);
}

TEST_CASE("sweep restricted to chosen checks and centralities") {
  SweepConfig cfg;
  cfg.source = EnumerateSource{4};
  cfg.centralities = {Kind::Harmonic};
  cfg.checks = {CheckId::StrictRankSemi, CheckId::CliqueLemma};
  SweepReport report = run_sweep(cfg);

  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].check == CheckId::StrictRankSemi);
  CHECK(report.rows[0].centrality == Kind::Harmonic);
  CHECK(report.rows[0].fails == 0);
  // Fixed-kind checks keep their own centrality regardless of the filter.
  CHECK(report.rows[1].check == CheckId::CliqueLemma);
  CHECK(report.rows[1].centrality == Kind::Betweenness);
  CHECK(report.rows[1].scenarios == report.graphs_generated);
}

TEST_CASE("random sweep is reproducible and tallies stay consistent") {
  SweepConfig cfg;
  cfg.source = RandomSource{8, 0.4, 30, 424242};
  SweepReport first = run_sweep(cfg);
  SweepReport second = run_sweep(cfg);

  CHECK(sweep_report_json(first) == sweep_report_json(second));
  CHECK(first.graphs_generated == 30);
  for (const CheckTally& row : first.rows) {
    CHECK(row.holds + row.fails == row.scenarios);
    CHECK((row.fails > 0) == row.exemplar.has_value());
  }
}

TEST_CASE("sweep aggregation does not depend on the thread count") {
  SweepConfig cfg;
  cfg.source = EnumerateSource{5};
  cfg.checks = {CheckId::ScoreSemi, CheckId::RankSemi, CheckId::PeripheralityIdentity};

  auto with_threads = [&](const char* value) {
    setenv("SEMIMONO_THREADS", value, 1);
    SweepReport report = run_sweep(cfg);
    unsetenv("SEMIMONO_THREADS");
    return sweep_report_json(report).dump();
  };

  std::string single = with_threads("1");
  std::string quad = with_threads("4");
  CHECK(single == quad);
}

TEST_CASE("invalid thread cap is rejected") {
  SweepConfig cfg;
  cfg.source = EnumerateSource{3};
  setenv("SEMIMONO_THREADS", "bogus", 1);
  CHECK_THROWS_AS(run_sweep(cfg), Error);
  unsetenv("SEMIMONO_THREADS");
}
