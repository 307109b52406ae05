#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "semimono/centrality.hpp"
#include "semimono/graph.hpp"
#include "semimono/rational.hpp"

namespace semimono {

namespace detail {

// One-shot thread-safe cache; safe for concurrent readers.
template <typename T>
class Lazy {
 public:
  template <typename F>
  const T& get(F&& make) const {
    std::call_once(flag_, [&] { value_.emplace(std::forward<F>(make)()); });
    return *value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable std::optional<T> value_;
};

}  // namespace detail

// A graph bundled with lazily computed, cached matrices and score vectors.
// Shareable across scenarios that reuse the same base graph.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Graph g) : graph_(std::move(g)) {}

  const Graph& graph() const { return graph_; }
  const AllPairs& pairs() const;
  const ScoreVector& scores(Kind kind) const;

 private:
  Graph graph_;
  detail::Lazy<AllPairs> pairs_;
  detail::Lazy<ScoreVector> scores_[3];
};

// The sets K_xy and K_yx; vertices equidistant from x and y appear in both.
struct BasinPartition {
  std::vector<Vertex> k_xy;
  std::vector<Vertex> k_yx;
  std::vector<Vertex> overlap() const;
};

// An edge-addition scenario: connected G, non-adjacent x,y, and G' = G + x-y.
// Matrices, scores and basins are computed once on demand; after construction
// the scenario is safe to query from concurrent tasks. Copies share caches.
class Scenario {
 public:
  Scenario(Graph g, Vertex x, Vertex y);
  Scenario(std::shared_ptr<const GraphAnalysis> base, Vertex x, Vertex y);

  Vertex x() const { return x_; }
  Vertex y() const { return y_; }
  const Graph& before_graph() const { return base_->graph(); }
  const Graph& after_graph() const { return modified_->graph(); }
  const AllPairs& before_pairs() const { return base_->pairs(); }
  const AllPairs& after_pairs() const { return modified_->pairs(); }
  const ScoreVector& before_scores(Kind kind) const { return base_->scores(kind); }
  const ScoreVector& after_scores(Kind kind) const { return modified_->scores(kind); }
  const BasinPartition& basins() const;

 private:
  std::shared_ptr<const GraphAnalysis> base_;
  std::shared_ptr<const GraphAnalysis> modified_;
  std::shared_ptr<const detail::Lazy<BasinPartition>> basins_;
  Vertex x_ = -1;
  Vertex y_ = -1;
};

// Basin membership, computed from distances in G (never G').
const BasinPartition& basins(const Scenario& s);

enum class Side { X, Y };

inline Vertex endpoint(const Scenario& s, Side side) {
  return side == Side::X ? s.x() : s.y();
}

// A vertex whose scores break the statement on the given side.
struct Witness {
  Vertex z;
  Side side;
  Rational before;
  Rational after;
};

struct MonotonicityVerdict {
  bool holds_at_x = false;
  bool holds_at_y = false;
  std::vector<Witness> witnesses;  // nonempty exactly for the failing sides
  bool semi_monotone() const { return holds_at_x || holds_at_y; }
};

struct DominanceViolation {
  Vertex u;
  Side side;
  Rational delta_u;
  Rational delta_endpoint;
};

// violations holds every basin member whose delta reaches its endpoint's
// delta; entries with delta_u == delta_endpoint break only the strict form.
struct DominanceReport {
  bool strict_holds = false;
  bool nonstrict_holds = false;
  std::vector<DominanceViolation> violations;
};

// Delta_u <= Delta_endpoint over both basins (strict variant with <).
DominanceReport basin_dominance(const Scenario& s, Kind kind);

// True iff at least one endpoint's score strictly increases; the witnesses
// carry the before/after scores of each non-increasing endpoint.
MonotonicityVerdict score_semi_monotone(const Scenario& s, Kind kind);

// Per side: every strict domination of a third vertex z survives the edge
// addition, and every tie stays a tie or a domination.
MonotonicityVerdict rank_semi_monotone(const Scenario& s, Kind kind);

// Per side: every z weakly dominated before is strictly dominated after.
MonotonicityVerdict strict_rank_semi_monotone(const Scenario& s, Kind kind);

// Returns (p'(x) - p'(y), |K_yx| - |K_xy|); the two are provably equal.
std::pair<BigInt, BigInt> peripherality_identity(const Scenario& s);

}  // namespace semimono
