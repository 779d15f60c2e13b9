#include "trackpath/tournament_tracker.hpp"

#include <string>

#include "forcing_loop.hpp"
#include "trackpath/errors.hpp"
#include "trackpath/preprocess.hpp"

namespace trackpath {

TrackingSet track_tournament(const StGraph& g, ForcingOptions options) {
  if (!g.directed()) throw ClassMismatchError("tournament tracking needs a directed graph");
  if (auto defect = tournament_defect(g)) {
    const auto [u, v] = *defect;
    const char* kind = g.has_edge(u, v) ? "both arcs" : "no arc";
    throw ClassMismatchError("not a tournament: pair " + std::to_string(u) + "," + std::to_string(v) + " has " + kind,
                             {u, v});
  }
  const auto reduced = reduce(g);
  const auto& h = reduced.graph;
  return detail::mark_forced(
      h, [&](VertexId a, VertexId b) { return detail::sorted_intersection(h.out_neighbors(a), h.in_neighbors(b)); },
      options);
}

}  // namespace trackpath
