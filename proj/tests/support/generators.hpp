#pragma once

// Seeded random instance generators for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "trackpath/graph.hpp"
#include "trackpath/preprocess.hpp"

namespace gen {

using trackpath::Direction;
using trackpath::Edge;
using trackpath::StGraph;
using trackpath::VertexId;
using trackpath::WeightedEdge;
using trackpath::WeightedMultigraph;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::pair<VertexId, VertexId> terminals(Rng& rng, std::size_t n) {
  auto s = static_cast<VertexId>(uniform(rng, 0, n - 1));
  auto t = static_cast<VertexId>(uniform(rng, 0, n - 2));
  if (t >= s) ++t;
  return {s, t};
}

inline StGraph gnp(Rng& rng, std::size_t n, double p, Direction dir = Direction::undirected) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || (dir == Direction::undirected && v < u)) continue;
      if (coin(rng, p)) edges.push_back({u, v});
    }
  auto [s, t] = terminals(rng, n);
  return StGraph(n, dir, s, t, edges);
}

// Chordal graph grown by adding simplicial vertices: each new vertex is joined
// to a random clique of 1..max_clique existing vertices. The insertion order
// reversed is a perfect elimination ordering; labels are shuffled afterwards.
inline StGraph chordal(Rng& rng, std::size_t n, std::size_t max_clique = 3) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> clique{uniform(rng, 0, v - 1)};
    const auto want = uniform(rng, 1, max_clique);
    std::vector<std::size_t> order(v);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (auto w : order) {
      if (clique.size() >= want) break;
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return adj[c][w]; })) clique.push_back(w);
    }
    for (auto c : clique) adj[v][c] = adj[c][v] = true;
  }
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.push_back({label[u], label[v]});
  auto [s, t] = terminals(rng, n);
  return StGraph(n, Direction::undirected, s, t, edges);
}

inline bool reaches(const StGraph& g, VertexId from, VertexId to) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (auto y : g.out_neighbors(x))
      if (!seen[y]) seen[y] = true, stack.push_back(y);
  }
  return false;
}

// Random orientation of K_n with t reachable from s.
inline StGraph tournament(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<Edge> arcs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) arcs.push_back(coin(rng, 0.5) ? Edge{u, v} : Edge{v, u});
    auto [s, t] = terminals(rng, n);
    StGraph g(n, Direction::directed, s, t, arcs);
    if (reaches(g, s, t)) return g;
  }
}

// Undirected graph with maximum degree at most `delta`.
inline StGraph bounded_degree(Rng& rng, std::size_t n, std::size_t delta, std::size_t attempts) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < attempts; ++i) {
    auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (u == v || deg[u] >= delta || deg[v] >= delta) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    ++deg[u];
    ++deg[v];
  }
  auto [s, t] = terminals(rng, n);
  return StGraph(n, Direction::undirected, s, t, edges);
}

// Small integer weights in [0, max_weight] so ties are common.
inline WeightedMultigraph multigraph(Rng& rng, std::size_t n, std::size_t m, int max_weight = 5) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 2));
    if (v >= u) ++v;
    edges.push_back({u, v, static_cast<double>(uniform(rng, 0, static_cast<std::size_t>(max_weight))),
                     static_cast<trackpath::EdgeId>(i)});
  }
  auto [s, t] = terminals(rng, n);
  return WeightedMultigraph(n, s, t, std::move(edges));
}

// Drops the isolated vertices a reduction leaves behind and renumbers the rest
// in ascending order.
inline StGraph compact(const trackpath::ReducedGraph& r) {
  const auto& g = r.graph;
  std::vector<VertexId> id(g.vertex_count(), 0);
  std::size_t next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!r.is_removed(v)) id[v] = static_cast<VertexId>(next++);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({id[e.u], id[e.v]});
  return StGraph(next, g.direction(), id[g.source()], id[g.target()], edges);
}

// Reduced, compacted instance with at least one edge, drawn from `make`.
template <class Make>
StGraph reduced_instance(Rng& rng, Make make) {
  for (;;) {
    auto g = make(rng);
    auto r = trackpath::reduce(g);
    if (!r.st_connected || r.graph.edge_count() == 0) continue;
    return compact(r);
  }
}

}  // namespace gen
