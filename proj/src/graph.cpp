#include "trackpath/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trackpath/errors.hpp"

namespace trackpath {

StGraph::StGraph(std::size_t n, Direction direction, VertexId s, VertexId t, std::span<const Edge> edges)
    : direction_(direction), s_(s), t_(t), out_(n), in_(direction == Direction::directed ? n : 0),
      all_(direction == Direction::directed ? n : 0), adjacency_(n * n, false) {
  if (s >= n || t >= n) throw PreconditionError("terminal out of range");
  if (s == t) throw PreconditionError("terminals must be distinct");
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self loop at vertex " + std::to_string(e.u));
    const bool dup = directed() ? adjacency_[e.u * n + e.v] : (adjacency_[e.u * n + e.v] || adjacency_[e.v * n + e.u]);
    if (dup) throw PreconditionError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    adjacency_[e.u * n + e.v] = true;
    out_[e.u].push_back(e.v);
    if (directed()) {
      in_[e.v].push_back(e.u);
      edges_.push_back(e);
    } else {
      adjacency_[e.v * n + e.u] = true;
      out_[e.v].push_back(e.u);
      edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    }
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  if (directed()) {
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(in_[v].begin(), in_[v].end());
      std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(), std::back_inserter(all_[v]));
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool is_simple_st_path(const StGraph& g, const Path& p) {
  const auto& vs = p.vertices;
  if (vs.empty() || vs.front() != g.source() || vs.back() != g.target()) return false;
  VertexMask seen(g.vertex_count());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count() || seen.test(vs[i])) return false;
    seen.set(vs[i]);
    if (i > 0 && !g.has_edge(vs[i - 1], vs[i])) return false;
  }
  return true;
}

TrackingSet::TrackingSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TrackingSet::contains(VertexId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void TrackingSet::insert(VertexId v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

VertexMask TrackingSet::mask(std::size_t n) const {
  VertexMask m(n);
  for (auto v : members_)
    if (v < n) m.set(v);
  return m;
}

TrackerSequence trace(const Path& path, const TrackingSet& trackers) {
  TrackerSequence out;
  for (auto v : path.vertices)
    if (trackers.contains(v)) out.seq.push_back(v);
  return out;
}

WeightedMultigraph::WeightedMultigraph(std::size_t n, VertexId s, VertexId t, std::vector<WeightedEdge> edges)
    : s_(s), t_(t), edges_(std::move(edges)), incident_(n) {
  if (s >= n || t >= n) throw PreconditionError("terminal out of range");
  if (s == t) throw PreconditionError("terminals must be distinct");
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.weight)) throw PreconditionError("edge weight must be finite");
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
    ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw PreconditionError("duplicate edge id");
}

const WeightedEdge* WeightedMultigraph::find(EdgeId id) const noexcept {
  for (const auto& e : edges_)
    if (e.id == id) return &e;
  return nullptr;
}

double WeightedMultigraph::total_weight() const noexcept {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double acc, const WeightedEdge& e) { return acc + e.weight; });
}

StGraph WeightedMultigraph::skeleton() const {
  std::vector<Edge> simple;
  for (const auto& e : edges_) simple.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  return StGraph(vertex_count(), Direction::undirected, s_, t_, simple);
}

std::size_t max_degree(const StGraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<std::pair<VertexId, VertexId>> tournament_defect(const StGraph& g) {
  if (!g.directed()) throw ClassMismatchError("tournament check needs a directed graph");
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) == g.has_edge(v, u)) return std::pair{u, v};
  return std::nullopt;
}

bool is_tournament(const StGraph& g) { return !tournament_defect(g).has_value(); }

bool is_acyclic(const GraphView& view) {
  const auto& g = view.graph();
  const auto n = g.vertex_count();
  if (!g.directed()) {
    // Forest iff no surviving edge joins two already-connected vertices.
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : g.edges()) {
      if (!view.contains(e.u) || !view.contains(e.v)) continue;
      auto a = find(e.u);
      auto b = find(e.v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }
  // Kahn's algorithm on the surviving arcs.
  std::vector<std::size_t> indeg(n, 0);
  std::size_t alive = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!view.contains(v)) continue;
    ++alive;
    for (auto u : g.in_neighbors(v))
      if (view.contains(u)) ++indeg[v];
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (view.contains(v) && indeg[v] == 0) queue.push_back(v);
  std::size_t done = 0;
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    ++done;
    for (auto w : g.out_neighbors(v))
      if (view.contains(w) && --indeg[w] == 0) queue.push_back(w);
  }
  return done == alive;
}

}  // namespace trackpath
