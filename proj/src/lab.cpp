#include "semimono/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace semimono {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Connectivity probe on raw adjacency bitmasks; avoids building Graph
// values for the (many) disconnected masks.
bool mask_connected(int n, const unsigned* adj) {
  if (n <= 1) return true;
  unsigned seen = 1u;
  unsigned frontier = 1u;
  while (frontier != 0) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier & (1u << v)) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

void mask_adjacency(int n, std::uint64_t mask, unsigned* adj) {
  std::fill(adj, adj + n, 0u);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

void check_enumeration_range(int n) {
  if (n < 1 || n > kMaxEnumerationN) {
    throw Error("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationN));
  }
}

}  // namespace

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
  check_enumeration_range(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  unsigned adj[kMaxEnumerationN];
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    mask_adjacency(n, mask, adj);
    if (mask_connected(n, adj)) fn(graph_from_mask(n, mask));
  }
}

std::uint64_t count_connected_graphs(int n) {
  check_enumeration_range(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  unsigned adj[kMaxEnumerationN];
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    mask_adjacency(n, mask, adj);
    if (mask_connected(n, adj)) ++count;
  }
  return count;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error("random graph requires n >= 1");
  if (!(p > 0.0) || p > 1.0) throw Error("random graph requires 0 < p <= 1");

  SplitMix64 rng(seed);
  constexpr int kMaxRejections = 1000;
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (rng.next_unit() < p) edges.emplace_back(i, j);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
  throw Error("no connected sample after " + std::to_string(kMaxRejections) +
              " rejections; try a larger p");
}

namespace {

// Walk every geodesic from `v` down to `target` along strictly
// distance-decreasing neighbors, counting interior traversals.
void walk_geodesics(const Graph& g, Vertex v, Vertex target,
                    const std::vector<Dist>& dist_to_target, std::vector<Vertex>& path,
                    BigInt& sigma, std::vector<BigInt>& through) {
  if (v == target) {
    sigma += 1;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) through[path[i]] += 1;
    return;
  }
  for (Vertex w : g.neighbors(v)) {
    if (dist_to_target[w] && *dist_to_target[w] == *dist_to_target[v] - 1) {
      path.push_back(w);
      walk_geodesics(g, w, target, dist_to_target, path, sigma, through);
      path.pop_back();
    }
  }
}

}  // namespace

ScoreVector naive_betweenness_oracle(const Graph& g) {
  return naive_betweenness_oracle(g, 12);
}

ScoreVector naive_betweenness_oracle(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) {
    throw Error("naive betweenness oracle limited to n <= " + std::to_string(max_n));
  }

  ScoreVector result{Kind::Betweenness, {}, {}};
  result.scores.assign(static_cast<std::size_t>(n), Rational(0));

  std::vector<Vertex> path;
  std::vector<BigInt> through(static_cast<std::size_t>(n));
  for (Vertex j = 0; j < n; ++j) {
    auto dist_to_j = bfs_distances(g, j);
    for (Vertex i = 0; i < j; ++i) {
      if (!dist_to_j[i]) continue;
      BigInt sigma = 0;
      std::fill(through.begin(), through.end(), BigInt(0));
      path.assign(1, i);
      walk_geodesics(g, i, j, dist_to_j, path, sigma, through);
      for (Vertex u = 0; u < n; ++u) {
        if (through[u] != 0) result.scores[u] += make_rational(through[u], sigma);
      }
    }
  }
  return result;
}

std::vector<PointwiseViolation> verify_pointwise_inequalities(const Scenario& s) {
  std::vector<PointwiseViolation> violations;
  const DistanceMatrix& before = s.before_pairs().dist;
  const DistanceMatrix& after = s.after_pairs().dist;
  const BasinPartition& partition = s.basins();
  const int n = s.before_graph().vertex_count();

  auto scan_basin = [&](const std::vector<Vertex>& basin, Side side) {
    Vertex e = endpoint(s, side);
    Vertex other = endpoint(s, side == Side::X ? Side::Y : Side::X);
    for (Vertex u : basin) {
      for (Vertex z = 0; z < n; ++z) {
        if (z == u || z == e) continue;
        int d_uz = *before(u, z);
        int dp_uz = *after(u, z);
        int d_ez = *before(e, z);
        int dp_ez = *after(e, z);

        if (d_uz - dp_uz > d_ez - dp_ez) {
          violations.push_back({"distance-delta", side, u, z, -1, Rational(d_uz - dp_uz),
                                Rational(d_ez - dp_ez)});
        }

        Rational lhs = make_rational(1, dp_uz) - make_rational(1, d_uz);
        Rational rhs = make_rational(1, dp_ez) - make_rational(1, d_ez);
        if (lhs > rhs) {
          violations.push_back({"reciprocal-delta", side, u, z, -1, lhs, rhs});
        }
        if (z == other && u != e && !(lhs < rhs)) {
          violations.push_back({"reciprocal-delta-strict", side, u, z, -1, std::move(lhs),
                                std::move(rhs)});
        }
      }
    }
  };
  scan_basin(partition.k_xy, Side::X);
  scan_basin(partition.k_yx, Side::Y);

  auto scan_dependencies = [&](Side side) {
    Vertex e = endpoint(s, side);
    for (Vertex i = 0; i < n; ++i) {
      if (i == e) continue;
      for (Vertex j = i + 1; j < n; ++j) {
        if (j == e) continue;
        Rational delta = pair_dependency(s.after_pairs(), e, i, j) -
                         pair_dependency(s.before_pairs(), e, i, j);
        if (delta < 0) {
          violations.push_back({"dependency-delta", side, e, i, j, std::move(delta),
                                Rational(0)});
        }
      }
    }
  };
  scan_dependencies(Side::X);
  scan_dependencies(Side::Y);
  return violations;
}

std::string_view check_name(CheckId check) {
  switch (check) {
    case CheckId::ScoreSemi: return "score_semi";
    case CheckId::RankSemi: return "rank_semi";
    case CheckId::StrictRankSemi: return "strict_rank_semi";
    case CheckId::Dominance: return "dominance";
    case CheckId::StrictDominance: return "strict_dominance";
    case CheckId::PointwiseIneqs: return "pointwise_ineqs";
    case CheckId::PeripheralityIdentity: return "peripherality_identity";
    case CheckId::ImplicationStrictDominance: return "implication_thm1";
    case CheckId::ImplicationDominance: return "implication_thm2";
    case CheckId::CliqueLemma: return "clique_lemma";
  }
  throw Error("unknown check id");
}

std::optional<CheckId> check_from_name(std::string_view name) {
  for (CheckId check : kAllChecks) {
    if (check_name(check) == name) return check;
  }
  return std::nullopt;
}

namespace {

int sweep_threads() {
  const char* env = std::getenv("SEMIMONO_THREADS");
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return static_cast<int>(hw);
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 0) {
    throw Error("SEMIMONO_THREADS must be a nonnegative integer");
  }
  if (value == 0) return static_cast<int>(hw);
  return static_cast<int>(value);
}

struct RowSpec {
  CheckId check;
  Kind kind;
  bool per_graph;  // tallied once per graph instead of once per scenario
};

bool kind_selected(const std::vector<Kind>& kinds, Kind kind) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

std::vector<RowSpec> build_rows(const std::vector<Kind>& kinds,
                                const std::vector<CheckId>& checks) {
  std::vector<RowSpec> rows;
  for (CheckId check : kAllChecks) {
    if (std::find(checks.begin(), checks.end(), check) == checks.end()) continue;
    switch (check) {
      case CheckId::ScoreSemi:
      case CheckId::RankSemi:
      case CheckId::StrictRankSemi:
      case CheckId::Dominance:
      case CheckId::StrictDominance:
      case CheckId::ImplicationStrictDominance:
      case CheckId::ImplicationDominance:
        for (Kind kind : kAllKinds) {
          if (kind_selected(kinds, kind)) rows.push_back({check, kind, false});
        }
        break;
      case CheckId::PointwiseIneqs:
        for (Kind kind : kAllKinds) rows.push_back({check, kind, false});
        break;
      case CheckId::PeripheralityIdentity:
        rows.push_back({check, Kind::Closeness, false});
        break;
      case CheckId::CliqueLemma:
        rows.push_back({check, Kind::Betweenness, true});
        break;
    }
  }
  return rows;
}

struct PartialRow {
  std::uint64_t scenarios = 0;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::optional<Exemplar> exemplar;
};

struct Partial {
  std::vector<PartialRow> rows;
  std::uint64_t graphs = 0;
  std::uint64_t scenarios = 0;
};

std::string describe_witness(const Graph& g, const Witness& witness) {
  std::ostringstream out;
  out << "z=" << g.label(witness.z) << " side=" << (witness.side == Side::X ? "x" : "y")
      << " before=" << fraction_str(witness.before) << " after=" << fraction_str(witness.after);
  return out.str();
}

// Lazily evaluated per-scenario verdict cache shared by the row loop.
class ScenarioEval {
 public:
  explicit ScenarioEval(const Scenario& s) : s_(s) {}

  const DominanceReport& dominance(Kind kind) {
    auto slot = static_cast<std::size_t>(kind);
    if (!dominance_[slot]) dominance_[slot] = basin_dominance(s_, kind);
    return *dominance_[slot];
  }
  const MonotonicityVerdict& score(Kind kind) {
    auto slot = static_cast<std::size_t>(kind);
    if (!score_[slot]) score_[slot] = score_semi_monotone(s_, kind);
    return *score_[slot];
  }
  const MonotonicityVerdict& rank(Kind kind) {
    auto slot = static_cast<std::size_t>(kind);
    if (!rank_[slot]) rank_[slot] = rank_semi_monotone(s_, kind);
    return *rank_[slot];
  }
  const MonotonicityVerdict& strict_rank(Kind kind) {
    auto slot = static_cast<std::size_t>(kind);
    if (!strict_rank_[slot]) strict_rank_[slot] = strict_rank_semi_monotone(s_, kind);
    return *strict_rank_[slot];
  }
  const std::vector<PointwiseViolation>& pointwise() {
    if (!pointwise_) pointwise_ = verify_pointwise_inequalities(s_);
    return *pointwise_;
  }

 private:
  const Scenario& s_;
  std::optional<DominanceReport> dominance_[3];
  std::optional<MonotonicityVerdict> score_[3];
  std::optional<MonotonicityVerdict> rank_[3];
  std::optional<MonotonicityVerdict> strict_rank_[3];
  std::optional<std::vector<PointwiseViolation>> pointwise_;
};

// holds + detail-on-fail for one scenario row.
std::pair<bool, std::string> evaluate_scenario_row(const RowSpec& row, const Scenario& s,
                                                   ScenarioEval& eval) {
  const Graph& g = s.before_graph();
  switch (row.check) {
    case CheckId::ScoreSemi: {
      const auto& verdict = eval.score(row.kind);
      if (verdict.semi_monotone()) return {true, {}};
      return {false, "no endpoint increased: " + describe_witness(g, verdict.witnesses[0])};
    }
    case CheckId::RankSemi:
    case CheckId::StrictRankSemi: {
      const auto& verdict =
          row.check == CheckId::RankSemi ? eval.rank(row.kind) : eval.strict_rank(row.kind);
      if (verdict.semi_monotone()) return {true, {}};
      return {false, describe_witness(g, verdict.witnesses[0])};
    }
    case CheckId::Dominance:
    case CheckId::StrictDominance: {
      const auto& report = eval.dominance(row.kind);
      bool strict = row.check == CheckId::StrictDominance;
      bool holds = strict ? report.strict_holds : report.nonstrict_holds;
      if (holds) return {true, {}};
      for (const auto& violation : report.violations) {
        if (!strict && violation.delta_u == violation.delta_endpoint) continue;
        std::ostringstream out;
        out << "u=" << g.label(violation.u)
            << " side=" << (violation.side == Side::X ? "x" : "y")
            << " delta_u=" << fraction_str(violation.delta_u)
            << " delta_endpoint=" << fraction_str(violation.delta_endpoint);
        return {false, out.str()};
      }
      return {false, "dominance violated"};
    }
    case CheckId::PointwiseIneqs: {
      for (const auto& violation : eval.pointwise()) {
        bool matches = (row.kind == Kind::Closeness && violation.inequality == "distance-delta") ||
                       (row.kind == Kind::Harmonic &&
                        violation.inequality.rfind("reciprocal-delta", 0) == 0) ||
                       (row.kind == Kind::Betweenness &&
                        violation.inequality == "dependency-delta");
        if (!matches) continue;
        std::ostringstream out;
        out << violation.inequality << " u=" << g.label(violation.u)
            << " z=" << g.label(violation.z)
            << (violation.j >= 0 ? " j=" + g.label(violation.j) : "")
            << " lhs=" << fraction_str(violation.lhs) << " rhs=" << fraction_str(violation.rhs);
        return {false, out.str()};
      }
      return {true, {}};
    }
    case CheckId::PeripheralityIdentity: {
      auto [lhs, rhs] = peripherality_identity(s);
      if (lhs == rhs) return {true, {}};
      return {false, "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str()};
    }
    case CheckId::ImplicationStrictDominance: {
      const auto& report = eval.dominance(row.kind);
      if (!report.strict_holds || eval.strict_rank(row.kind).semi_monotone()) return {true, {}};
      return {false, "strict dominance holds but strict rank semi-monotonicity fails"};
    }
    case CheckId::ImplicationDominance: {
      const auto& report = eval.dominance(row.kind);
      if (!report.nonstrict_holds || eval.rank(row.kind).semi_monotone()) return {true, {}};
      return {false, "dominance holds but rank semi-monotonicity fails"};
    }
    case CheckId::CliqueLemma:
      throw Error("clique lemma is a per-graph check");
  }
  throw Error("unknown check id");
}

std::pair<bool, std::string> evaluate_clique_lemma(const GraphAnalysis& analysis) {
  const Graph& g = analysis.graph();
  const auto& scores = analysis.scores(Kind::Betweenness).scores;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    bool zero = scores[u] == 0;
    bool clique = g.ego_is_clique(u);
    if (zero != clique) {
      std::ostringstream out;
      out << "vertex " << g.label(u) << ": b=" << fraction_str(scores[u])
          << " ego-clique=" << (clique ? "true" : "false");
      return {false, out.str()};
    }
  }
  return {true, {}};
}

void process_graph(const Graph& g, const std::vector<RowSpec>& rows, Partial& partial) {
  auto base = std::make_shared<const GraphAnalysis>(g);
  partial.graphs += 1;

  auto record = [&](std::size_t row_index, bool holds, const std::string& detail,
                    Vertex x, Vertex y) {
    PartialRow& tally = partial.rows[row_index];
    tally.scenarios += 1;
    if (holds) {
      tally.holds += 1;
    } else {
      tally.fails += 1;
      if (!tally.exemplar) {
        tally.exemplar = Exemplar{g.to_edge_list(), x >= 0 ? g.label(x) : std::string{},
                                  y >= 0 ? g.label(y) : std::string{}, detail};
      }
    }
  };

  bool any_scenario_rows = false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].per_graph) {
      auto [holds, detail] = evaluate_clique_lemma(*base);
      record(r, holds, detail, -1, -1);
    } else {
      any_scenario_rows = true;
    }
  }
  if (!any_scenario_rows) return;

  const int n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      Scenario scenario(base, x, y);
      partial.scenarios += 1;
      ScenarioEval eval(scenario);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].per_graph) continue;
        auto [holds, detail] = evaluate_scenario_row(rows[r], scenario, eval);
        record(r, holds, detail, x, y);
      }
    }
  }
}

struct Chunk {
  int n = 0;                     // enumerate: graph size
  std::uint64_t mask_begin = 0;  // enumerate: bitmask range
  std::uint64_t mask_end = 0;
  std::size_t graph_begin = 0;   // random: pre-generated graph range
  std::size_t graph_end = 0;
};

void merge_partial(Partial& into, const Partial& from) {
  into.graphs += from.graphs;
  into.scenarios += from.scenarios;
  for (std::size_t r = 0; r < into.rows.size(); ++r) {
    into.rows[r].scenarios += from.rows[r].scenarios;
    into.rows[r].holds += from.rows[r].holds;
    into.rows[r].fails += from.rows[r].fails;
    if (!into.rows[r].exemplar && from.rows[r].exemplar) {
      into.rows[r].exemplar = from.rows[r].exemplar;
    }
  }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  auto start = std::chrono::steady_clock::now();

  SweepConfig normalized = cfg;
  if (normalized.centralities.empty()) {
    normalized.centralities.assign(std::begin(kAllKinds), std::end(kAllKinds));
  }
  if (normalized.checks.empty()) {
    normalized.checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
  }

  const int threads = sweep_threads();
  const auto rows = build_rows(normalized.centralities, normalized.checks);

  std::vector<Chunk> chunks;
  std::vector<Graph> random_graphs;

  if (const auto* src = std::get_if<EnumerateSource>(&normalized.source)) {
    check_enumeration_range(src->n_max);
    for (int n = 1; n <= src->n_max; ++n) {
      const std::uint64_t total = std::uint64_t{1} << pair_count(n);
      const std::uint64_t target_chunks =
          std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 8);
      const std::uint64_t step = (total + target_chunks - 1) / target_chunks;
      for (std::uint64_t begin = 0; begin < total; begin += step) {
        chunks.push_back({n, begin, std::min(begin + step, total), 0, 0});
      }
    }
  } else {
    const auto& random = std::get<RandomSource>(normalized.source);
    if (random.count < 1) throw Error("random sweep requires count >= 1");
    random_graphs.reserve(static_cast<std::size_t>(random.count));
    // Sequential generation: graph g_i uses seed+i, so the stream does not
    // depend on how many draws earlier graphs consumed.
    for (int i = 0; i < random.count; ++i) {
      random_graphs.push_back(random_connected_graph(random.n, random.p, random.seed + i));
    }
    const std::size_t total = random_graphs.size();
    const std::size_t target_chunks =
        std::min(total, static_cast<std::size_t>(threads) * 8);
    const std::size_t step = (total + target_chunks - 1) / target_chunks;
    for (std::size_t begin = 0; begin < total; begin += step) {
      chunks.push_back({0, 0, 0, begin, std::min(begin + step, total)});
    }
  }

  std::vector<Partial> partials(chunks.size());
  for (auto& partial : partials) partial.rows.resize(rows.size());

  std::atomic<std::size_t> next_chunk{0};
  auto worker = [&] {
    unsigned adj[kMaxEnumerationN];
    while (true) {
      std::size_t index = next_chunk.fetch_add(1);
      if (index >= chunks.size()) break;
      const Chunk& chunk = chunks[index];
      Partial& partial = partials[index];
      if (chunk.n > 0) {
        for (std::uint64_t mask = chunk.mask_begin; mask < chunk.mask_end; ++mask) {
          mask_adjacency(chunk.n, mask, adj);
          if (!mask_connected(chunk.n, adj)) continue;
          process_graph(graph_from_mask(chunk.n, mask), rows, partial);
        }
      } else {
        for (std::size_t i = chunk.graph_begin; i < chunk.graph_end; ++i) {
          process_graph(random_graphs[i], rows, partial);
        }
      }
    }
  };

  if (threads <= 1 || chunks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int spawn = std::min<int>(threads, static_cast<int>(chunks.size()));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  // Generation-order merge keeps the report independent of scheduling.
  Partial merged;
  merged.rows.resize(rows.size());
  for (const Partial& partial : partials) merge_partial(merged, partial);

  SweepReport report;
  report.config = std::move(normalized);
  report.graphs_generated = merged.graphs;
  report.scenarios_built = merged.scenarios;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    report.rows.push_back({rows[r].check, rows[r].kind, merged.rows[r].scenarios,
                           merged.rows[r].holds, merged.rows[r].fails,
                           std::move(merged.rows[r].exemplar)});
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace semimono
