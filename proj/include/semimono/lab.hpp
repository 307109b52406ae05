#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semimono/centrality.hpp"
#include "semimono/graph.hpp"
#include "semimono/monotonicity.hpp"

namespace semimono {

// Fully specified 64-bit generator so randomized runs reproduce across
// platforms; the report header names it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline constexpr std::string_view kPrngName = "splitmix64";

// Largest vertex count for exhaustive labeled enumeration.
inline constexpr int kMaxEnumerationN = 7;

// Invokes fn for every connected labeled simple graph on exactly n vertices,
// in increasing adjacency-bitmask order. 1 <= n <= 7.
void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn);

// Number of connected labeled simple graphs on exactly n vertices.
std::uint64_t count_connected_graphs(int n);

// Rejection-sampled G(n,p) conditioned on connectivity. Deterministic for a
// given seed: pairs (i,j), i<j, are visited in lexicographic order and edge
// i-j is included iff the next splitmix64 unit draw is < p. Errors after
// 1000 consecutive rejections.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

// Betweenness by literal geodesic enumeration: every shortest path between
// every pair is walked and interior vertices counted. Independent of the
// Brandes path; n <= 12 by default (geodesic counts grow exponentially).
ScoreVector naive_betweenness_oracle(const Graph& g);
ScoreVector naive_betweenness_oracle(const Graph& g, int max_n);

// One violated per-vertex inequality from the pointwise sweep.
struct PointwiseViolation {
  std::string inequality;  // "distance-delta" | "reciprocal-delta" |
                           // "reciprocal-delta-strict" | "dependency-delta"
  Side side;
  Vertex u;        // basin member (endpoint itself for dependency-delta)
  Vertex z;        // third vertex, or pair member i for dependency-delta
  Vertex j = -1;   // pair member j for dependency-delta, else -1
  Rational lhs;
  Rational rhs;
};

// Checks, with exact arithmetic, for every basin member u and every z:
//   distance-delta:    d(u,z) - d'(u,z)   <=  d(e,z) - d'(e,z)
//   reciprocal-delta:  1/d'(u,z) - 1/d(u,z) <= 1/d'(e,z) - 1/d(e,z)
//     (strict at z = the opposite endpoint, for u != e)
// and for both endpoints e and all pairs {i,j} avoiding e:
//   dependency-delta:  sigma'_ij(e)/sigma'_ij - sigma_ij(e)/sigma_ij >= 0.
// Returns the empty vector when every inequality holds.
std::vector<PointwiseViolation> verify_pointwise_inequalities(const Scenario& s);

enum class CheckId {
  ScoreSemi,
  RankSemi,
  StrictRankSemi,
  Dominance,
  StrictDominance,
  PointwiseIneqs,
  PeripheralityIdentity,
  ImplicationStrictDominance,  // strict dominance => strict rank semi-mono
  ImplicationDominance,        // dominance => rank semi-mono
  CliqueLemma,                 // b(u) = 0 <=> ego network of u is a clique
};

inline constexpr CheckId kAllChecks[] = {
    CheckId::ScoreSemi,        CheckId::RankSemi,
    CheckId::StrictRankSemi,   CheckId::Dominance,
    CheckId::StrictDominance,  CheckId::PointwiseIneqs,
    CheckId::PeripheralityIdentity, CheckId::ImplicationStrictDominance,
    CheckId::ImplicationDominance,  CheckId::CliqueLemma,
};

std::string_view check_name(CheckId check);
std::optional<CheckId> check_from_name(std::string_view name);

struct EnumerateSource {
  int n_max = 0;  // sweeps sizes 1..n_max
};

struct RandomSource {
  int n = 0;
  double p = 0.0;
  int count = 0;
  std::uint64_t seed = 0;  // mandatory
};

struct SweepConfig {
  std::variant<EnumerateSource, RandomSource> source;
  std::vector<Kind> centralities;  // empty = all three
  std::vector<CheckId> checks;     // empty = all checks
};

// First failing scenario for a check, in generation order.
struct Exemplar {
  std::string edge_list;
  std::string x_label;
  std::string y_label;
  std::string detail;
};

struct CheckTally {
  CheckId check;
  Kind centrality;
  std::uint64_t scenarios = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::optional<Exemplar> exemplar;  // present iff fails > 0
};

struct SweepReport {
  SweepConfig config;
  std::vector<CheckTally> rows;
  std::uint64_t graphs_generated = 0;
  std::uint64_t scenarios_built = 0;
  double wall_seconds = 0.0;  // text footer only, never serialized to json/csv
};

// Runs the configured checks over every generated connected graph and every
// non-adjacent vertex pair. Check failures are data, not errors. Parallelism
// is capped by SEMIMONO_THREADS (0 or unset = auto); results are aggregated
// in generation order and do not depend on the schedule.
SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace semimono
