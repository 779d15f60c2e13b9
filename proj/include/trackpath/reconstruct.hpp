#pragma once

#include <optional>

#include "trackpath/graph.hpp"

namespace trackpath {

struct ReconstructOptions {
  /// Ask the engine for a second splice and raise InvariantViolation if one
  /// exists (that would prove `trackers` is not a tracking set).
  bool check_uniqueness = true;
};

/// The s-t path whose tracker sequence is exactly `pi`, or nothing.
///
/// Each tracker v_i of pi gets a copy v_i' with the neighborhood of v_i (but
/// not adjacent to v_i); trackers outside pi are deleted, and vertex-disjoint
/// paths are routed for (s, v_1), (v_1', v_2), ..., (v_k', t). Splicing the
/// segments at v_i / v_i' gives the path. Works for undirected and directed
/// graphs (copies take both in- and out-arcs).
///
/// `trackers` must be a tracking set of g (not checked). Throws
/// PreconditionError when pi names a vertex outside `trackers`.
std::optional<Path> reconstruct_path(const StGraph& g, const TrackingSet& trackers, const TrackerSequence& pi,
                                     ReconstructOptions options = {});

}  // namespace trackpath
