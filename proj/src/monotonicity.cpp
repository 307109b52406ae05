#include "semimono/monotonicity.hpp"

#include <algorithm>

namespace semimono {

const AllPairs& GraphAnalysis::pairs() const {
  return pairs_.get([this] { return all_pairs(graph_); });
}

const ScoreVector& GraphAnalysis::scores(Kind kind) const {
  auto slot = static_cast<std::size_t>(kind);
  return scores_[slot].get([this, kind] {
    switch (kind) {
      case Kind::Closeness: return closeness(graph_, pairs().dist);
      case Kind::Harmonic: return harmonic(graph_, pairs().dist);
      case Kind::Betweenness: return betweenness(graph_);
    }
    throw Error("unknown centrality kind");
  });
}

std::vector<Vertex> BasinPartition::overlap() const {
  std::vector<Vertex> both;
  std::set_intersection(k_xy.begin(), k_xy.end(), k_yx.begin(), k_yx.end(),
                        std::back_inserter(both));
  return both;
}

Scenario::Scenario(Graph g, Vertex x, Vertex y)
    : Scenario(std::make_shared<const GraphAnalysis>(std::move(g)), x, y) {}

Scenario::Scenario(std::shared_ptr<const GraphAnalysis> base, Vertex x, Vertex y)
    : base_(std::move(base)), x_(x), y_(y) {
  const Graph& g = base_->graph();
  if (!g.valid_vertex(x) || !g.valid_vertex(y)) throw Error("scenario: vertex out of range");
  if (x == y) throw Error("scenario: endpoints coincide");
  if (g.has_edge(x, y))
    throw Error("scenario: vertices '" + g.label(x) + "' and '" + g.label(y) +
                "' are adjacent");
  if (!g.is_connected()) throw Error("scenario requires a connected graph");
  modified_ = std::make_shared<const GraphAnalysis>(g.add_edge(x, y));
  basins_ = std::make_shared<const detail::Lazy<BasinPartition>>();
}

const BasinPartition& Scenario::basins() const {
  return basins_->get([this] {
    BasinPartition partition;
    const DistanceMatrix& dist = before_pairs().dist;
    for (Vertex u = 0; u < before_graph().vertex_count(); ++u) {
      int du_x = *dist(u, x_);
      int du_y = *dist(u, y_);
      if (du_x <= du_y) partition.k_xy.push_back(u);
      if (du_y <= du_x) partition.k_yx.push_back(u);
    }
    return partition;
  });
}

const BasinPartition& basins(const Scenario& s) { return s.basins(); }

DominanceReport basin_dominance(const Scenario& s, Kind kind) {
  const ScoreVector& before = s.before_scores(kind);
  const ScoreVector& after = s.after_scores(kind);
  const BasinPartition& partition = s.basins();

  DominanceReport report;
  report.strict_holds = true;
  report.nonstrict_holds = true;

  auto scan = [&](const std::vector<Vertex>& basin, Side side) {
    Vertex e = endpoint(s, side);
    Rational delta_e = after.scores[e] - before.scores[e];
    for (Vertex u : basin) {
      if (u == e) continue;
      Rational delta_u = after.scores[u] - before.scores[u];
      if (delta_u >= delta_e) {
        report.strict_holds = false;
        if (delta_u > delta_e) report.nonstrict_holds = false;
        report.violations.push_back({u, side, std::move(delta_u), delta_e});
      }
    }
  };
  scan(partition.k_xy, Side::X);
  scan(partition.k_yx, Side::Y);
  return report;
}

MonotonicityVerdict score_semi_monotone(const Scenario& s, Kind kind) {
  const ScoreVector& before = s.before_scores(kind);
  const ScoreVector& after = s.after_scores(kind);

  MonotonicityVerdict verdict;
  verdict.holds_at_x = after.scores[s.x()] > before.scores[s.x()];
  verdict.holds_at_y = after.scores[s.y()] > before.scores[s.y()];
  if (!verdict.holds_at_x)
    verdict.witnesses.push_back({s.x(), Side::X, before.scores[s.x()], after.scores[s.x()]});
  if (!verdict.holds_at_y)
    verdict.witnesses.push_back({s.y(), Side::Y, before.scores[s.y()], after.scores[s.y()]});
  return verdict;
}

namespace {

// Shared scan for the two rank statements; `strict` selects which one.
MonotonicityVerdict rank_verdict(const Scenario& s, Kind kind, bool strict) {
  const ScoreVector& before = s.before_scores(kind);
  const ScoreVector& after = s.after_scores(kind);
  const int n = s.before_graph().vertex_count();

  MonotonicityVerdict verdict;
  auto side_holds = [&](Side side) {
    Vertex e = endpoint(s, side);
    bool holds = true;
    for (Vertex z = 0; z < n; ++z) {
      if (z == s.x() || z == s.y()) continue;
      bool violated;
      if (strict) {
        violated = before.scores[z] <= before.scores[e] && !(after.scores[z] < after.scores[e]);
      } else {
        violated =
            (before.scores[z] < before.scores[e] && !(after.scores[z] < after.scores[e])) ||
            (before.scores[z] == before.scores[e] && !(after.scores[z] <= after.scores[e]));
      }
      if (violated) {
        holds = false;
        verdict.witnesses.push_back({z, side, before.scores[z], after.scores[z]});
      }
    }
    return holds;
  };
  verdict.holds_at_x = side_holds(Side::X);
  verdict.holds_at_y = side_holds(Side::Y);
  return verdict;
}

}  // namespace

MonotonicityVerdict rank_semi_monotone(const Scenario& s, Kind kind) {
  return rank_verdict(s, kind, /*strict=*/false);
}

MonotonicityVerdict strict_rank_semi_monotone(const Scenario& s, Kind kind) {
  return rank_verdict(s, kind, /*strict=*/true);
}

std::pair<BigInt, BigInt> peripherality_identity(const Scenario& s) {
  const ScoreVector& after = s.after_scores(Kind::Closeness);
  BigInt lhs = after.peripheralities[s.x()] - after.peripheralities[s.y()];
  const BasinPartition& partition = s.basins();
  BigInt rhs = BigInt(static_cast<long>(partition.k_yx.size())) -
               BigInt(static_cast<long>(partition.k_xy.size()));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace semimono
