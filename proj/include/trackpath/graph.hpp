#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trackpath/types.hpp"

namespace trackpath {

enum class Direction { undirected, directed };

struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph with designated terminals s and t. Immutable once built.
///
/// Adjacency lists are sorted ascending, which every search in the library
/// relies on for deterministic tie-breaking. For undirected graphs `edges()`
/// lists each edge once with u < v; for directed graphs it lists arcs (u, v).
class StGraph {
 public:
  /// Throws PreconditionError on self loops, parallel edges, out-of-range
  /// endpoints, or s == t.
  StGraph(std::size_t n, Direction direction, VertexId s, VertexId t, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return direction_ == Direction::directed; }
  Direction direction() const noexcept { return direction_; }
  VertexId source() const noexcept { return s_; }
  VertexId target() const noexcept { return t_; }

  /// Successors; equal to `neighbors` for undirected graphs.
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  /// Predecessors; equal to `neighbors` for undirected graphs.
  std::span<const VertexId> in_neighbors(VertexId v) const { return directed() ? in_[v] : out_[v]; }
  /// N(v). For directed graphs the union of in- and out-neighbors.
  std::span<const VertexId> neighbors(VertexId v) const { return directed() ? all_[v] : out_[v]; }

  /// deg(v); in-degree plus out-degree for directed graphs.
  std::size_t degree(VertexId v) const noexcept {
    return directed() ? out_[v].size() + in_[v].size() : out_[v].size();
  }

  /// For directed graphs, whether the arc u -> v exists.
  bool has_edge(VertexId u, VertexId v) const noexcept { return adjacency_[u * vertex_count() + v]; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Same vertices and terminals, only the edges satisfying `keep`.
  template <class Pred>
  StGraph filter_edges(Pred keep) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_)
      if (keep(e)) kept.push_back(e);
    return StGraph(vertex_count(), direction_, s_, t_, kept);
  }

 private:
  Direction direction_;
  VertexId s_;
  VertexId t_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<std::vector<VertexId>> all_;
  std::vector<bool> adjacency_;
  std::vector<Edge> edges_;
};

/// Read-only view of a graph with a set of vertices masked out (G - X).
class GraphView {
 public:
  GraphView(const StGraph& graph)  // NOLINT(google-explicit-constructor)
      : graph_(&graph), removed_(graph.vertex_count()) {}
  GraphView(const StGraph& graph, VertexMask removed) : graph_(&graph), removed_(std::move(removed)) {}

  const StGraph& graph() const noexcept { return *graph_; }
  const VertexMask& removed() const noexcept { return removed_; }
  bool contains(VertexId v) const noexcept { return !removed_.test(v); }

  GraphView without(VertexId v) const {
    GraphView copy = *this;
    copy.removed_.set(v);
    return copy;
  }

 private:
  const StGraph* graph_;
  VertexMask removed_;
};

/// A path as an ordered vertex sequence. `edges` is filled only for paths in
/// multigraphs, where it records which parallel edge each step used.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Checks that `p` is a simple s-t path of `g` (directions respected).
bool is_simple_st_path(const StGraph& g, const Path& p);

/// Sorted, duplicate-free vertex set claimed to distinguish all s-t paths.
class TrackingSet {
 public:
  TrackingSet() = default;
  explicit TrackingSet(std::vector<VertexId> members);

  const std::vector<VertexId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(VertexId v) const noexcept;
  void insert(VertexId v);
  VertexMask mask(std::size_t n) const;

  friend bool operator==(const TrackingSet&, const TrackingSet&) = default;

 private:
  std::vector<VertexId> members_;
};

/// Observed ordered trackers of one path (pi).
struct TrackerSequence {
  std::vector<VertexId> seq;

  friend bool operator==(const TrackerSequence&, const TrackerSequence&) = default;
};

/// Trackers of `path` in traversal order.
TrackerSequence trace(const Path& path, const TrackingSet& trackers);

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
  EdgeId id;
};

/// Undirected edge-weighted multigraph with terminals. Parallel edges are
/// allowed; self loops are not. Edge ids are caller-chosen and unique, and they
/// survive reduction so tracked edges always refer to the input.
class WeightedMultigraph {
 public:
  WeightedMultigraph(std::size_t n, VertexId s, VertexId t, std::vector<WeightedEdge> edges);

  std::size_t vertex_count() const noexcept { return incident_.size(); }
  VertexId source() const noexcept { return s_; }
  VertexId target() const noexcept { return t_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

  /// Positions into `edges()` of the edges incident to v, ascending.
  std::span<const std::size_t> incident(VertexId v) const { return incident_[v]; }

  /// Edge with the given id, if present.
  const WeightedEdge* find(EdgeId id) const noexcept;

  double total_weight() const noexcept;

  /// The underlying simple undirected graph (one edge per adjacent pair).
  StGraph skeleton() const;

 private:
  VertexId s_;
  VertexId t_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Maximum degree delta; in+out degree for directed graphs.
std::size_t max_degree(const StGraph& g);

/// Whether every unordered vertex pair carries exactly one arc.
/// Throws ClassMismatchError for undirected input.
bool is_tournament(const StGraph& g);

/// First unordered pair {u, v} (u < v) with zero or two arcs, if any.
std::optional<std::pair<VertexId, VertexId>> tournament_defect(const StGraph& g);

/// Whether the graph (undirected) has no cycle, or (directed) no directed cycle,
/// after deleting `removed`.
bool is_acyclic(const GraphView& g);

}  // namespace trackpath
