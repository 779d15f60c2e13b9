#pragma once

#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

struct TrackingEdgeSet {
  std::vector<EdgeId> members;
  double total_weight = 0.0;
  /// True when reduction removed edges or vertices before the tree was built,
  /// i.e. the input was not already an s-t path core.
  bool normalized = false;
};

/// Maximum-weight spanning forest by Kruskal: edges in descending weight,
/// ties by ascending id, union-find cycle test. Returns the tree edge ids in
/// ascending order.
std::vector<EdgeId> max_weight_spanning_tree(const WeightedMultigraph& g);

/// Minimum-weight tracking edge set: the complement of a maximum-weight
/// spanning forest of the reduced multigraph. Weights must be non-negative
/// (PreconditionError otherwise).
TrackingEdgeSet track_edges(const WeightedMultigraph& g);

}  // namespace trackpath
