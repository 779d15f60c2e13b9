#pragma once

#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

struct FvsResult {
  std::vector<VertexId> members;
  int approximation_factor = 2;
};

/// 2-approximate feedback vertex set of an undirected graph.
///
/// Local-ratio scheme on unit weights: while the cleaned graph (no vertices of
/// degree <= 1) is nonempty, either subtract the minimum weight around a
/// semidisjoint cycle (a cycle with at most one vertex of degree > 2) or, when
/// none exists, subtract gamma * (deg(v) - 1) from every vertex. Vertices whose
/// weight reaches zero are stacked; a final reverse pass drops every stacked
/// vertex not needed for acyclicity.
FvsResult fvs_2approx(const StGraph& g);

/// Tracking set S ∪ N(S) for a 2-approximate FVS S of the reduced graph; at
/// most 2(delta + 1) times the optimum. Terminals are never marked.
TrackingSet track_bounded_degree(const StGraph& g);

}  // namespace trackpath
