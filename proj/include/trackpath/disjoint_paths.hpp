#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

struct EndpointPair {
  VertexId from;
  VertexId to;
};

/// One path per requested pair, pairwise vertex-disjoint (endpoints included).
struct DisjointPathSystem {
  std::vector<Path> paths;

  friend bool operator==(const DisjointPathSystem&, const DisjointPathSystem&) = default;
};

struct DisjointPathOptions {
  /// Allow from == to, answered by the single-vertex path.
  bool allow_trivial = false;
};

/// Exact vertex-disjoint paths with prescribed endpoints.
///
/// Backtracking search: pair i is routed by DFS over neighbors in ascending id
/// order, then the remaining pairs are solved recursively with the path's
/// vertices blocked. Partial routes are pruned when a pending pair loses
/// connectivity, and failed (pair index, blocked set) states are memoized per
/// call. Worst case is exponential; intended for desk-scale graphs.
///
/// Endpoints of different pairs must be distinct vertices (PreconditionError
/// otherwise). An endpoint that is masked out in `g` makes the instance
/// infeasible rather than an error. Paths follow arc direction in directed
/// graphs. The first system found is returned, so results are deterministic.
std::optional<DisjointPathSystem> k_disjoint_paths(const GraphView& g, std::span<const EndpointPair> pairs,
                                                   DisjointPathOptions options = {});

std::optional<DisjointPathSystem> two_disjoint_paths(const GraphView& g, EndpointPair first, EndpointPair second,
                                                     DisjointPathOptions options = {});

/// Up to `limit` distinct systems, in search order.
std::vector<DisjointPathSystem> enumerate_disjoint_paths(const GraphView& g, std::span<const EndpointPair> pairs,
                                                         std::size_t limit, DisjointPathOptions options = {});

}  // namespace trackpath
