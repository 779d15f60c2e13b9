#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

/// Undirected simple graph without terminals: a Vertex Cover instance.
struct VcSource {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

/// Tracking instance G' built from a Vertex Cover instance.
///
/// Layout: s and t are vertices 0 and 1. Each source vertex a becomes v_a
/// (row V_v); each source edge i = (a, b) becomes v_i in V_e and v_i' in V_e',
/// both adjacent to v_a and v_b. A triangular grid Tg1 hangs below s with rows
/// of 1, 2, ..., |E| vertices whose last row is V_e; Tg2 mirrors it above t
/// ending in V_e'. With a single source edge the grids collapse to the
/// terminals themselves (v_1 = s, v_1' = t).
struct ReductionInstance {
  StGraph graph;
  std::vector<std::string> names;
  /// Source vertex -> its V_v vertex.
  std::vector<VertexId> v_map;
  /// Source edge i -> (v_i, v_i').
  std::vector<std::pair<VertexId, VertexId>> e_map;
  /// Every vertex of Tg1 ∪ Tg2 except s and t, ascending.
  std::vector<VertexId> grid_vertices;
  /// Number of grid vertices, counted on the built instance.
  std::size_t forced_count = 0;

  /// The closed form |E|^2 + 3|E| - 2 quoted for the construction; reported
  /// alongside forced_count, which can differ from it.
  std::size_t closed_form_count() const;
};

/// Throws PreconditionError for an edgeless source, self loops or parallel edges.
ReductionInstance vc_to_tracking_instance(const VcSource& source);

}  // namespace trackpath
