#include "trackpath/preprocess.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "trackpath/disjoint_paths.hpp"
#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

bool reaches(const StGraph& g, VertexId from, VertexId to) {
  VertexMask seen(g.vertex_count());
  std::vector<VertexId> stack{from};
  seen.set(from);
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (auto y : g.out_neighbors(x)) {
      if (seen.test(y)) continue;
      seen.set(y);
      stack.push_back(y);
    }
  }
  return false;
}

// s..from, then the edge from -> to, then to..t.
std::optional<Path> through_oriented(const GraphView& g, VertexId from, VertexId to) {
  const auto s = g.graph().source();
  const auto t = g.graph().target();
  if (from == t || to == s) return std::nullopt;
  auto system = two_disjoint_paths(g, {s, from}, {to, t}, {.allow_trivial = true});
  if (!system) return std::nullopt;
  Path path = std::move(system->paths[0]);
  const auto& tail = system->paths[1].vertices;
  path.vertices.insert(path.vertices.end(), tail.begin(), tail.end());
  return path;
}

}  // namespace

bool ReducedGraph::is_removed(VertexId v) const {
  return std::binary_search(removed_vertices.begin(), removed_vertices.end(), v);
}

std::optional<Path> st_path_through_edge(const GraphView& g, VertexId a, VertexId b) {
  const auto& graph = g.graph();
  if (a >= graph.vertex_count() || b >= graph.vertex_count() || !graph.has_edge(a, b))
    throw PreconditionError("edge not present in graph");
  if (!g.contains(a) || !g.contains(b)) return std::nullopt;
  if (auto p = through_oriented(g, a, b)) return p;
  if (!graph.directed()) return through_oriented(g, b, a);
  return std::nullopt;
}

bool edge_on_st_path(const GraphView& g, VertexId a, VertexId b) { return st_path_through_edge(g, a, b).has_value(); }

ReducedGraph reduce(const StGraph& g) {
  const auto n = g.vertex_count();
  const auto s = g.source();
  const auto t = g.target();
  std::vector<Edge> removed_edges;
  VertexMask removed(n);
  bool connected = reaches(g, s, t);
  StGraph current = g;
  if (!connected) {
    removed_edges = g.edges();
    current = g.filter_edges([](const Edge&) { return false; });
  } else {
    for (;;) {
      std::vector<Edge> dropped;
      for (const auto& e : current.edges())
        if (!edge_on_st_path(current, e.u, e.v)) dropped.push_back(e);
      if (dropped.empty()) break;
      current = current.filter_edges([&](const Edge& e) { return !std::binary_search(dropped.begin(), dropped.end(), e); });
      removed_edges.insert(removed_edges.end(), dropped.begin(), dropped.end());
    }
  }
  std::vector<VertexId> removed_vertices;
  for (VertexId v = 0; v < n; ++v)
    if (v != s && v != t && current.degree(v) == 0) removed_vertices.push_back(v);
  std::sort(removed_edges.begin(), removed_edges.end());
  return ReducedGraph{std::move(current), std::move(removed_vertices), std::move(removed_edges), connected};
}

ReducedMultigraph reduce(const WeightedMultigraph& g) {
  const auto core = reduce(g.skeleton());
  std::vector<WeightedEdge> kept;
  std::vector<EdgeId> removed_edges;
  for (const auto& e : g.edges()) {
    if (core.graph.has_edge(e.u, e.v))
      kept.push_back(e);
    else
      removed_edges.push_back(e.id);
  }
  std::sort(removed_edges.begin(), removed_edges.end());
  return ReducedMultigraph{WeightedMultigraph(g.vertex_count(), g.source(), g.target(), std::move(kept)),
                           core.removed_vertices, std::move(removed_edges), core.st_connected};
}

}  // namespace trackpath
