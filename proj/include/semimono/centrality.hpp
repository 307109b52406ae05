#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "semimono/graph.hpp"
#include "semimono/rational.hpp"

namespace semimono {

enum class Kind { Closeness, Harmonic, Betweenness };

inline constexpr Kind kAllKinds[] = {Kind::Closeness, Kind::Harmonic, Kind::Betweenness};

std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);

// Per-vertex exact scores; peripheralities are populated iff kind is
// Closeness (score = 1/p, with the n = 1 score defined as 0).
struct ScoreVector {
  Kind kind;
  std::vector<Rational> scores;
  std::vector<BigInt> peripheralities;
};

// p(u) = sum of distances from u; score = 1/p(u). Requires a connected
// graph; the error names an unreachable pair.
ScoreVector closeness(const Graph& g);
ScoreVector closeness(const Graph& g, const DistanceMatrix& dist);

// h(u) = sum over v != u of 1/d(u,v); unreachable pairs contribute 0.
ScoreVector harmonic(const Graph& g);
ScoreVector harmonic(const Graph& g, const DistanceMatrix& dist);

// Brandes-style accumulation over exact rationals; pairs {i,j} are unordered
// and endpoints are excluded from their own pair terms.
ScoreVector betweenness(const Graph& g);

ScoreVector centrality(const Graph& g, Kind kind);

// Fraction of i~j geodesics passing through interior vertex u, i.e.
// sigma_iu * sigma_uj / sigma_ij when d(i,u) + d(u,j) = d(i,j), else 0.
// Requires i != j, u distinct from both, and i,j mutually reachable.
Rational pair_dependency(const AllPairs& ap, Vertex u, Vertex i, Vertex j);
Rational pair_dependency(const Graph& g, Vertex u, Vertex i, Vertex j);

}  // namespace semimono
