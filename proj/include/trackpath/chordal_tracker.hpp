#pragma once

#include "trackpath/forcing.hpp"
#include "trackpath/graph.hpp"

namespace trackpath {

/// Optimum tracking set of an undirected chordal s-t graph.
///
/// Reduces the graph, then marks every x in N(a) ∩ N(b) for an edge (a, b)
/// such that some s-t path of G - x uses (a, b). Throws ClassMismatchError
/// (witness: a chordless cycle) for non-chordal input and for directed input.
TrackingSet track_chordal(const StGraph& g, ForcingOptions options = {});

}  // namespace trackpath
