#include "semimono/families.hpp"

#include <sstream>

#include "semimono/lab.hpp"
#include "semimono/monotonicity.hpp"

namespace semimono {

bool ClaimReport::all_pass() const {
  for (const Claim& claim : claims) {
    if (!claim.pass) return false;
  }
  return true;
}

ClosenessFamily build_closeness_counterexample(long k) {
  if (k < 1) throw Error("closeness family requires k >= 1");

  // Fixed ids: x=0, y=1, u=2, w=3, a1=4, a2=5, b1=6, b2=7, then the y star
  // and the w star. a1,a2 join y to x; b1,b2 join x to w, with the extra
  // a1-b1 edge; u hangs between x and w.
  const Vertex x = 0, y = 1, u = 2, w = 3, a1 = 4, a2 = 5, b1 = 6, b2 = 7;
  const int n = static_cast<int>(2 * k + 12);

  std::vector<std::string> labels = {"x", "y", "u", "w", "a1", "a2", "b1", "b2"};
  std::vector<std::pair<Vertex, Vertex>> edges = {
      {y, a1}, {y, a2}, {a1, x}, {a2, x}, {a1, b1},
      {x, b1}, {x, b2}, {x, u},  {b1, w}, {b2, w}, {u, w},
  };

  Vertex next = 8;
  for (long i = 1; i <= k; ++i) {
    labels.push_back("y" + std::to_string(i));
    edges.emplace_back(y, next++);
  }
  for (long i = 1; i <= k + 4; ++i) {
    labels.push_back("w" + std::to_string(i));
    edges.emplace_back(w, next++);
  }

  return ClosenessFamily{Graph::from_edges(n, edges, std::move(labels)), x, y, u, w};
}

BetweennessFamily build_betweenness_counterexample(long m) {
  if (m < 1) throw Error("betweenness family requires m >= 1");

  const Vertex x = 0, y = 1, u = 2;
  const int n = static_cast<int>(m + 3);

  std::vector<std::string> labels = {"x", "y", "u"};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long i = 0; i < m; ++i) {
    Vertex c = static_cast<Vertex>(3 + i);
    labels.push_back("c" + std::to_string(i + 1));
    edges.emplace_back(x, c);
    edges.emplace_back(y, c);
    edges.emplace_back(u, c);
    for (long j = 0; j < i; ++j) edges.emplace_back(static_cast<Vertex>(3 + j), c);
  }

  return BetweennessFamily{Graph::from_edges(n, edges, std::move(labels)), x, y, u};
}

namespace {

Claim equal_claim(std::string name, const BigInt& got, const BigInt& expected) {
  std::ostringstream detail;
  detail << "got " << got.get_str() << ", expected " << expected.get_str();
  return {std::move(name), got == expected, detail.str()};
}

Claim bool_claim(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

}  // namespace

ClaimReport validate_closeness_counterexample(long k) {
  if (k < 10) throw Error("closeness family claims hold for k >= 10");

  auto family = build_closeness_counterexample(k);
  const Graph& g = family.graph;
  Scenario scenario(g, family.x, family.y);

  ClaimReport report{"closeness", k, {}};
  auto& claims = report.claims;

  claims.push_back(equal_claim("vertex-count", g.vertex_count(), BigInt(2 * k + 12)));
  claims.push_back(equal_claim("edge-count", static_cast<long>(g.edge_count()),
                               BigInt(2 * k + 15)));
  claims.push_back(bool_claim("connected", g.is_connected(), ""));
  claims.push_back(bool_claim("x-y-non-adjacent", !g.has_edge(family.x, family.y), ""));

  const auto& p = scenario.before_scores(Kind::Closeness).peripheralities;
  const auto& pp = scenario.after_scores(Kind::Closeness).peripheralities;
  const BigInt kk(k);

  claims.push_back(equal_claim("p(u)", p[family.u], 2 * (kk + 4) + 4 * kk + 13));
  claims.push_back(equal_claim("p(x)", p[family.x], 3 * (kk + 4) + 3 * kk + 9));
  claims.push_back(equal_claim("p(y)", p[family.y], 4 * (kk + 4) + kk + 15));
  claims.push_back(equal_claim("p'(u)", pp[family.u], 2 * (kk + 4) + 3 * kk + 12));
  claims.push_back(equal_claim("p'(x)", pp[family.x], 3 * (kk + 4) + 2 * kk + 8));
  claims.push_back(equal_claim("p'(y)", pp[family.y], 4 * (kk + 4) + kk + 12));

  auto relation = [&](std::string name, const BigInt& lhs, const BigInt& rhs, bool pass) {
    std::ostringstream detail;
    detail << lhs.get_str() << " vs " << rhs.get_str();
    claims.push_back(bool_claim(std::move(name), pass, detail.str()));
  };
  relation("p(x)==p(u)", p[family.x], p[family.u], p[family.x] == p[family.u]);
  relation("p'(x)==p'(u)", pp[family.x], pp[family.u], pp[family.x] == pp[family.u]);
  relation("p(y)<=p(u)", p[family.y], p[family.u], p[family.y] <= p[family.u]);
  relation("p'(y)>p'(u)", pp[family.y], pp[family.u], pp[family.y] > pp[family.u]);

  auto rank = rank_semi_monotone(scenario, Kind::Closeness);
  claims.push_back(bool_claim("rank-semi-holds-at-x", rank.holds_at_x, ""));
  bool witness_u = false;
  for (const Witness& witness : rank.witnesses) {
    if (witness.side == Side::Y && witness.z == family.u) witness_u = true;
  }
  claims.push_back(
      bool_claim("rank-semi-fails-at-y-with-witness-u", !rank.holds_at_y && witness_u, ""));

  auto strict = strict_rank_semi_monotone(scenario, Kind::Closeness);
  claims.push_back(bool_claim("strict-rank-fails-both-sides",
                              !strict.holds_at_x && !strict.holds_at_y, ""));
  return report;
}

ClaimReport validate_betweenness_counterexample(long m) {
  if (m < 1) throw Error("betweenness family requires m >= 1");

  auto family = build_betweenness_counterexample(m);
  const Graph& g = family.graph;
  Scenario scenario(g, family.x, family.y);

  ClaimReport report{"betweenness", m, {}};
  auto& claims = report.claims;

  claims.push_back(equal_claim("vertex-count", g.vertex_count(), BigInt(m + 3)));
  claims.push_back(equal_claim("edge-count", static_cast<long>(g.edge_count()),
                               BigInt(m * (m - 1) / 2 + 3 * m)));
  claims.push_back(bool_claim("connected", g.is_connected(), ""));
  claims.push_back(bool_claim("x-y-u-pairwise-non-adjacent",
                              !g.has_edge(family.x, family.y) &&
                                  !g.has_edge(family.x, family.u) &&
                                  !g.has_edge(family.y, family.u),
                              ""));

  const Graph& gp = scenario.after_graph();
  const auto& b = scenario.before_scores(Kind::Betweenness).scores;
  const auto& bp = scenario.after_scores(Kind::Betweenness).scores;
  const Vertex specials[] = {family.x, family.y, family.u};

  auto all_zero = [&](const std::vector<Rational>& scores) {
    for (Vertex v : specials) {
      if (scores[v] != 0) return false;
    }
    return true;
  };
  claims.push_back(bool_claim("b-zero-before", all_zero(b), "x,y,u scores in G"));
  claims.push_back(bool_claim("b-zero-after", all_zero(bp), "x,y,u scores in G'"));

  // The geodesics of this family have length <= 2, so the enumeration oracle
  // stays cheap at any m.
  auto oracle_before = naive_betweenness_oracle(g, g.vertex_count());
  auto oracle_after = naive_betweenness_oracle(gp, gp.vertex_count());
  claims.push_back(bool_claim("oracle-zero-before", all_zero(oracle_before.scores), ""));
  claims.push_back(bool_claim("oracle-zero-after", all_zero(oracle_after.scores), ""));

  bool egos_before = true;
  bool egos_after = true;
  for (Vertex v : specials) {
    egos_before = egos_before && g.ego_is_clique(v);
    egos_after = egos_after && gp.ego_is_clique(v);
  }
  claims.push_back(bool_claim("ego-cliques-before", egos_before, "x,y,u in G"));
  claims.push_back(bool_claim("ego-cliques-after", egos_after, "x,y,u in G'"));

  auto score = score_semi_monotone(scenario, Kind::Betweenness);
  claims.push_back(bool_claim("score-semi-fails", !score.semi_monotone(), ""));

  auto strict = strict_rank_semi_monotone(scenario, Kind::Betweenness);
  claims.push_back(bool_claim("strict-rank-fails-both-sides",
                              !strict.holds_at_x && !strict.holds_at_y, ""));
  return report;
}

}  // namespace semimono
