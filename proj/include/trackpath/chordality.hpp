#pragma once

#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (filled when chordal).
  std::vector<VertexId> elimination_order;
  /// Chordless cycle of length >= 4 in cycle order (filled when not chordal).
  std::vector<VertexId> chordless_cycle;
};

/// Chordality test by lexicographic BFS followed by validation of the
/// candidate elimination ordering. Throws ClassMismatchError on directed input.
ChordalityResult is_chordal(const StGraph& g);

/// Whether, for every vertex, its neighbors later in `order` form a clique.
bool is_perfect_elimination_ordering(const StGraph& g, const std::vector<VertexId>& order);

}  // namespace trackpath
