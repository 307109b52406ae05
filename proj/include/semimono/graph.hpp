#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semimono/rational.hpp"

namespace semimono {

// Thrown for precondition violations and malformed input. The CLI maps it
// to a one-line diagnostic and exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;

// Hop distance; nullopt marks an unreachable pair.
using Dist = std::optional<int>;

// Simple undirected graph with dense vertex ids 0..n-1 and one string label
// per vertex. Immutable after construction; add_edge returns a new value.
class Graph {
 public:
  // Parses "u v" lines; '#' comments and blank lines are ignored. Labels map
  // to dense ids in first-seen order, duplicate edges collapse silently.
  static Graph from_edge_list(std::string_view text);

  // Labels default to "0".."n-1". Duplicate edges collapse silently.
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                          std::vector<std::string> labels);

  // New graph with the extra edge x-y; requires x != y and x,y non-adjacent.
  Graph add_edge(Vertex x, Vertex y) const;

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  const std::string& label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view label) const;

  // Edges as (u,v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  // One "label_u label_v" line per edge, in edges() order.
  std::string to_edge_list() const;

  // True iff a BFS from vertex 0 reaches everything; n <= 1 is connected.
  bool is_connected() const;

  // True iff every two distinct neighbors of u are adjacent.
  bool ego_is_clique(Vertex u) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;  // sorted neighbor lists
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
};

// Symmetric n x n hop-distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}
  Dist operator()(Vertex u, Vertex v) const { return cells_[index(u, v)]; }
  Dist& at(Vertex u, Vertex v) { return cells_[index(u, v)]; }
  int size() const { return n_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<Dist> cells_;
};

// Symmetric n x n matrix of geodesic counts; sigma(u,u) = 1 by convention.
class PathCountMatrix {
 public:
  explicit PathCountMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}
  const BigInt& operator()(Vertex u, Vertex v) const { return cells_[index(u, v)]; }
  BigInt& at(Vertex u, Vertex v) { return cells_[index(u, v)]; }
  int size() const { return n_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<BigInt> cells_;
};

struct AllPairs {
  DistanceMatrix dist;
  PathCountMatrix sigma;
};

// Exact hop distances from s; unreachable vertices get nullopt.
std::vector<Dist> bfs_distances(const Graph& g, Vertex s);

// BFS from every source, geodesic counts accumulated along the BFS DAG.
AllPairs all_pairs(const Graph& g);

}  // namespace semimono
