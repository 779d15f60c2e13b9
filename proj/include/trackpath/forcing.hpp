#pragma once

#include <optional>

#include "trackpath/graph.hpp"

namespace trackpath {

/// Two s-t paths that differ only in whether they pass through `vertex`:
/// `with_vertex` replaces the edge `bypass` of `without_vertex` by the detour
/// bypass.u -> vertex -> bypass.v. Any tracking set must contain `vertex`.
struct ForcedWitness {
  VertexId vertex;
  Edge bypass;
  Path without_vertex;
  Path with_vertex;
};

/// Searches the edges around `x` for a triangle detour certifying that x is a
/// forced tracker. Undirected: x adjacent to both ends of an edge; directed:
/// arcs a -> x -> b next to the arc a -> b.
std::optional<ForcedWitness> forced_witness(const StGraph& g, VertexId x);

/// Knobs for the forced-vertex marking loop shared by the chordal and
/// tournament algorithms. Membership does not depend on either setting.
struct ForcingOptions {
  /// Skip candidates already in T (pure optimization).
  bool skip_marked = true;
  /// Visit edges and candidates in descending instead of ascending id order.
  bool reverse_order = false;
};

}  // namespace trackpath
