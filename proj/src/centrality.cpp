#include "semimono/centrality.hpp"

#include <algorithm>
#include <vector>

namespace semimono {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Closeness: return "closeness";
    case Kind::Harmonic: return "harmonic";
    case Kind::Betweenness: return "betweenness";
  }
  throw Error("unknown centrality kind");
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (Kind kind : kAllKinds) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

ScoreVector closeness(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  ScoreVector result{Kind::Closeness, {}, {}};
  result.scores.reserve(static_cast<std::size_t>(n));
  result.peripheralities.reserve(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    BigInt p = 0;
    for (Vertex v = 0; v < n; ++v) {
      Dist d = dist(u, v);
      if (!d) {
        throw Error("closeness undefined on a disconnected graph: '" + g.label(u) +
                    "' cannot reach '" + g.label(v) + "'");
      }
      p += *d;
    }
    result.scores.push_back(p == 0 ? Rational(0) : make_rational(1, p));
    result.peripheralities.push_back(std::move(p));
  }
  return result;
}

ScoreVector closeness(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dist(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) dist.at(s, t) = row[t];
  }
  return closeness(g, dist);
}

ScoreVector harmonic(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  ScoreVector result{Kind::Harmonic, {}, {}};
  result.scores.reserve(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    Rational h = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      Dist d = dist(u, v);
      if (d) h += make_rational(1, *d);  // unreachable terms contribute 0
    }
    result.scores.push_back(std::move(h));
  }
  return result;
}

ScoreVector harmonic(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dist(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) dist.at(s, t) = row[t];
  }
  return harmonic(g, dist);
}

ScoreVector betweenness(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Rational> accumulated(static_cast<std::size_t>(n), Rational(0));

  // Brandes accumulation with exact rationals, one source at a time.
  std::vector<Dist> dist(static_cast<std::size_t>(n));
  std::vector<BigInt> sigma(static_cast<std::size_t>(n));
  std::vector<Rational> delta(static_cast<std::size_t>(n));
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));

  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), Dist{});
    std::fill(sigma.begin(), sigma.end(), BigInt(0));
    std::fill(delta.begin(), delta.end(), Rational(0));
    order.clear();

    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
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

    // delta[v] = sum over targets t of sigma_st(v)/sigma_st, built by
    // walking the BFS order backwards.
    for (std::size_t idx = order.size(); idx-- > 0;) {
      Vertex w = order[idx];
      if (w == s) continue;
      Rational coefficient = (Rational(1) + delta[w]) / Rational(sigma[w]);
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] && *dist[v] + 1 == *dist[w]) {
          delta[v] += Rational(sigma[v]) * coefficient;
        }
      }
      accumulated[w] += delta[w];
    }
  }

  ScoreVector result{Kind::Betweenness, {}, {}};
  result.scores.reserve(static_cast<std::size_t>(n));
  // Each unordered pair {i,j} was visited from both i and j.
  for (Vertex v = 0; v < n; ++v) result.scores.push_back(accumulated[v] / 2);
  return result;
}

ScoreVector centrality(const Graph& g, Kind kind) {
  switch (kind) {
    case Kind::Closeness: return closeness(g);
    case Kind::Harmonic: return harmonic(g);
    case Kind::Betweenness: return betweenness(g);
  }
  throw Error("unknown centrality kind");
}

Rational pair_dependency(const AllPairs& ap, Vertex u, Vertex i, Vertex j) {
  if (i == j) throw Error("pair_dependency: pair endpoints coincide");
  if (u == i || u == j) throw Error("pair_dependency: u must differ from both endpoints");
  Dist d_ij = ap.dist(i, j);
  if (!d_ij) throw Error("pair_dependency: pair is unreachable");
  Dist d_iu = ap.dist(i, u);
  Dist d_uj = ap.dist(u, j);
  if (!d_iu || !d_uj || *d_iu + *d_uj != *d_ij) return Rational(0);
  return make_rational(ap.sigma(i, u) * ap.sigma(u, j), ap.sigma(i, j));
}

Rational pair_dependency(const Graph& g, Vertex u, Vertex i, Vertex j) {
  if (!g.valid_vertex(u) || !g.valid_vertex(i) || !g.valid_vertex(j))
    throw Error("pair_dependency: vertex out of range");
  return pair_dependency(all_pairs(g), u, i, j);
}

}  // namespace semimono
