#pragma once

#include <optional>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

/// Result of deleting every vertex and edge that lies on no s-t path.
///
/// Vertex ids are preserved: removed vertices remain in `graph` as isolated
/// ids and are listed in `removed_vertices`.
struct ReducedGraph {
  StGraph graph;
  std::vector<VertexId> removed_vertices;
  std::vector<Edge> removed_edges;
  /// False when t is unreachable from s; the graph is then edgeless.
  bool st_connected = true;

  bool is_removed(VertexId v) const;
};

struct ReducedMultigraph {
  WeightedMultigraph graph;
  std::vector<VertexId> removed_vertices;
  std::vector<EdgeId> removed_edges;
  bool st_connected = true;
};

/// Some simple s-t path of `g` that traverses the edge {a, b} (the arc a -> b
/// when directed), or nothing. Found by splitting into disjoint s..a and b..t
/// routes (plus the flipped orientation when undirected).
/// Throws PreconditionError when the edge is absent from the underlying graph.
std::optional<Path> st_path_through_edge(const GraphView& g, VertexId a, VertexId b);

/// Whether some simple s-t path of `g` traverses the edge {a, b}.
bool edge_on_st_path(const GraphView& g, VertexId a, VertexId b);

/// Reduction to the s-t path core, iterated to a fixpoint. Edges are tested
/// in ascending (u, v) order against the graph at the start of each round.
ReducedGraph reduce(const StGraph& g);

/// Multigraph variant; parallel edges share the verdict of their endpoint pair.
ReducedMultigraph reduce(const WeightedMultigraph& g);

}  // namespace trackpath
