#pragma once

#include <string>
#include <vector>

#include "semimono/graph.hpp"

namespace semimono {

// Counterexample family for strict rank semi-monotonicity of closeness:
// a star of k leaves around y, a star of k+4 leaves around w, and a fixed
// middle section that ties the scores of x and u. Built for k >= 1; the
// published claims hold for k >= 10.
struct ClosenessFamily {
  Graph graph;
  Vertex x;
  Vertex y;
  Vertex u;
  Vertex w;
};
ClosenessFamily build_closeness_counterexample(long k);

// Counterexample family for score semi-monotonicity of betweenness: three
// mutually non-adjacent apex vertices x, y, u each adjacent to every vertex
// of a K_m clique.
struct BetweennessFamily {
  Graph graph;
  Vertex x;
  Vertex y;
  Vertex u;
};
BetweennessFamily build_betweenness_counterexample(long m);

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ClaimReport {
  std::string family;   // "closeness" | "betweenness"
  long parameter = 0;   // k or m
  std::vector<Claim> claims;
  bool all_pass() const;
};

// Recomputes everything from scratch (BFS, exact scores, verdicts) and checks
// each published claim about the closeness family. Requires k >= 10.
ClaimReport validate_closeness_counterexample(long k);

// Checks the betweenness family claims: zero scores for x,y,u before and
// after the edge addition, clique ego networks, no score increase at either
// endpoint, and strict rank failure on both sides. Requires m >= 1.
ClaimReport validate_betweenness_counterexample(long m);

}  // namespace semimono
