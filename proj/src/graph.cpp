#include "semimono/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace semimono {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph Graph::from_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto intern = [&](const std::string& label) -> Vertex {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    Vertex id = static_cast<Vertex>(labels.size());
    labels.push_back(label);
    index.emplace(label, id);
    return id;
  };

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 2) {
      throw Error("edge list line " + std::to_string(line_no) +
                  ": expected two whitespace-separated labels");
    }
    if (tokens[0] == tokens[1]) {
      throw Error("edge list line " + std::to_string(line_no) + ": self-loop '" + tokens[0] +
                  "'");
    }
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }

  if (edges.empty()) throw Error("edge list holds no edges");
  const int n = static_cast<int>(labels.size());
  return from_edges(n, edges, std::move(labels));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return from_edges(n, edges, std::move(labels));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw Error("negative vertex count");
  if (static_cast<int>(labels.size()) != n) throw Error("label count does not match vertex count");

  Graph g;
  g.n_ = n;
  g.labels_ = std::move(labels);
  for (Vertex v = 0; v < n; ++v) {
    const std::string& label = g.labels_[v];
    if (label.empty()) throw Error("empty vertex label");
    for (char c : label) {
      if (std::isspace(static_cast<unsigned char>(c)))
        throw Error("vertex label contains whitespace: '" + label + "'");
    }
    if (!g.label_index_.emplace(label, v).second)
      throw Error("duplicate vertex label '" + label + "'");
  }

  std::set<std::pair<Vertex, Vertex>> unique;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop at vertex '" + g.labels_[u] + "'");
    unique.emplace(std::min(u, v), std::max(u, v));
  }

  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : unique) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = unique.size();
  return g;
}

Graph Graph::add_edge(Vertex x, Vertex y) const {
  if (!valid_vertex(x) || !valid_vertex(y)) throw Error("add_edge: vertex out of range");
  if (x == y) throw Error("add_edge: endpoints coincide");
  if (has_edge(x, y))
    throw Error("add_edge: edge " + labels_[x] + "-" + labels_[y] + " already present");

  Graph g = *this;
  g.adjacency_[x].insert(std::upper_bound(g.adjacency_[x].begin(), g.adjacency_[x].end(), y), y);
  g.adjacency_[y].insert(std::upper_bound(g.adjacency_[y].begin(), g.adjacency_[y].end(), x), x);
  ++g.edge_count_;
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!valid_vertex(v)) throw Error("vertex out of range");
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

const std::string& Graph::label(Vertex v) const {
  if (!valid_vertex(v)) throw Error("vertex out of range");
  return labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  for (auto [u, v] : edges()) out << labels_[u] << ' ' << labels_[v] << '\n';
  return out.str();
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  auto dist = bfs_distances(*this, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Dist& d) { return d.has_value(); });
}

bool Graph::ego_is_clique(Vertex u) const {
  const auto& nbrs = neighbors(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!has_edge(nbrs[i], nbrs[j])) return false;
    }
  }
  return true;
}

std::vector<Dist> bfs_distances(const Graph& g, Vertex s) {
  if (!g.valid_vertex(s)) throw Error("bfs source out of range");
  std::vector<Dist> dist(static_cast<std::size_t>(g.vertex_count()));
  std::deque<Vertex> queue;
  dist[s] = 0;
  queue.push_back(s);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int next = *dist[v] + 1;
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

AllPairs all_pairs(const Graph& g) {
  const int n = g.vertex_count();
  AllPairs ap{DistanceMatrix(n), PathCountMatrix(n)};

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    order.clear();
    std::vector<Dist> dist(static_cast<std::size_t>(n));
    std::vector<BigInt> sigma(static_cast<std::size_t>(n));
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    // BFS; counts accumulate along DAG edges (dist[w] == dist[v] + 1).
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      int next = *dist[v] + 1;
      for (Vertex w : g.neighbors(v)) {
        if (!dist[w]) {
          dist[w] = next;
          order.push_back(w);
        }
        if (*dist[w] == next) sigma[w] += sigma[v];
      }
    }
    for (Vertex t = 0; t < n; ++t) {
      ap.dist.at(s, t) = dist[t];
      ap.sigma.at(s, t) = sigma[t];
    }
  }
  return ap;
}

}  // namespace semimono
