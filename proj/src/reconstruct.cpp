#include "trackpath/reconstruct.hpp"

#include <string>

#include "trackpath/disjoint_paths.hpp"
#include "trackpath/errors.hpp"

namespace trackpath {

std::optional<Path> reconstruct_path(const StGraph& g, const TrackingSet& trackers, const TrackerSequence& pi,
                                     ReconstructOptions options) {
  const auto n = g.vertex_count();
  const auto s = g.source();
  const auto t = g.target();
  for (auto v : pi.seq)
    if (v >= n || !trackers.contains(v))
      throw PreconditionError("vertex " + std::to_string(v) + " in the sequence is not a tracker");

  // Terminals are on every path at fixed positions; when tracked they must
  // open / close the sequence and are otherwise dropped from the waypoints.
  std::vector<VertexId> waypoints = pi.seq;
  if (trackers.contains(s)) {
    if (waypoints.empty() || waypoints.front() != s) return std::nullopt;
    waypoints.erase(waypoints.begin());
  }
  if (trackers.contains(t)) {
    if (waypoints.empty() || waypoints.back() != t) return std::nullopt;
    waypoints.pop_back();
  }
  VertexMask in_pi(n);
  for (auto v : waypoints) {
    if (v == s || v == t || in_pi.test(v)) return std::nullopt;
    in_pi.set(v);
  }

  // Augmented graph: original vertices, then one copy per waypoint.
  const auto k = waypoints.size();
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < k; ++i) {
    const auto copy = static_cast<VertexId>(n + i);
    for (auto w : g.out_neighbors(waypoints[i])) edges.push_back({copy, w});
    if (g.directed())
      for (auto w : g.in_neighbors(waypoints[i])) edges.push_back({w, copy});
  }
  const StGraph augmented(n + k, g.direction(), s, t, edges);

  VertexMask removed(n + k);
  for (auto v : trackers.members())
    if (v < n && v != s && v != t && !in_pi.test(v)) removed.set(v);

  std::vector<EndpointPair> pairs;
  VertexId from = s;
  for (std::size_t i = 0; i < k; ++i) {
    pairs.push_back({from, waypoints[i]});
    from = static_cast<VertexId>(n + i);
  }
  pairs.push_back({from, t});

  const auto systems =
      enumerate_disjoint_paths(GraphView(augmented, std::move(removed)), pairs, options.check_uniqueness ? 2 : 1);
  if (systems.empty()) return std::nullopt;
  if (systems.size() > 1)
    throw InvariantViolation("two distinct s-t paths share the tracker sequence; the set is not a tracking set");

  Path path;
  for (std::size_t i = 0; i < systems.front().paths.size(); ++i) {
    const auto& seg = systems.front().paths[i].vertices;
    // Segment i > 0 starts at the copy of waypoint i-1, which was already emitted.
    path.vertices.insert(path.vertices.end(), seg.begin() + (i == 0 ? 0 : 1), seg.end());
  }
  if (!is_simple_st_path(g, path)) throw InvariantViolation("spliced reconstruction is not a simple s-t path");
  return path;
}

}  // namespace trackpath
