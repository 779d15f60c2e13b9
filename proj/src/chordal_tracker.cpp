#include "trackpath/chordal_tracker.hpp"

#include "forcing_loop.hpp"
#include "trackpath/chordality.hpp"
#include "trackpath/errors.hpp"
#include "trackpath/preprocess.hpp"

namespace trackpath {

TrackingSet track_chordal(const StGraph& g, ForcingOptions options) {
  if (g.directed()) throw ClassMismatchError("chordal tracking needs an undirected graph");
  auto chordality = is_chordal(g);
  if (!chordality.chordal) throw ClassMismatchError("graph is not chordal", std::move(chordality.chordless_cycle));
  const auto reduced = reduce(g);
  const auto& h = reduced.graph;
  return detail::mark_forced(
      h, [&](VertexId a, VertexId b) { return detail::sorted_intersection(h.neighbors(a), h.neighbors(b)); },
      options);
}

}  // namespace trackpath
