#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trackpath/edge_tracker.hpp"
#include "trackpath/graph.hpp"

namespace trackpath {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct OracleLimits {
  std::size_t path_cap = kDefaultPathCap;
  /// min_tracking_set refuses larger graphs.
  std::size_t max_vertices = 12;
};

/// Violation of the tracking set condition: two distinct u-v paths whose inner
/// vertices avoid T ∪ {s, t}, extended by disjoint routes s..u and v..t that
/// avoid both paths except at u and v.
struct ConditionWitness {
  VertexId u;
  VertexId v;
  Path first;
  Path second;
  Path source_leg;
  Path target_leg;
};

struct VerificationReport {
  bool valid = true;
  /// Two distinct s-t paths with identical tracker sequences.
  std::optional<std::pair<Path, Path>> witness;
  std::optional<ConditionWitness> condition_witness;
};

/// All simple s-t paths in lexicographic order of their vertex sequences.
/// Throws ResourceError once more than `cap` paths exist.
std::vector<Path> enumerate_st_paths(const StGraph& g, std::size_t cap = kDefaultPathCap);

/// Multigraph variant: parallel edges give distinct paths; `Path::edges` is set.
std::vector<Path> enumerate_st_paths(const WeightedMultigraph& g, std::size_t cap = kDefaultPathCap);

/// Brute force: valid iff path -> tracker subsequence is injective.
VerificationReport is_tracking_set(const StGraph& g, const TrackingSet& trackers, std::size_t cap = kDefaultPathCap);

/// Brute-force search for a tracking set condition violation (u, v, P1, P2,
/// P_su, P_vt). Valid iff none exists. On reduced graphs this agrees with
/// is_tracking_set; a violation always implies `trackers` is not a tracking set.
VerificationReport condition_witness(const StGraph& g, const TrackingSet& trackers,
                                     std::size_t cap = kDefaultPathCap);

/// Minimum-cardinality tracking set by exhaustive subset search (size, then
/// lexicographic order over non-terminal vertex ids). Throws ResourceError
/// past `limits.max_vertices`.
TrackingSet min_tracking_set(const StGraph& g, OracleLimits limits = {});

/// Valid iff path -> ordered tracked edge ids is injective.
VerificationReport is_tracking_edge_set(const WeightedMultigraph& g, const TrackingEdgeSet& trackers,
                                        std::size_t cap = kDefaultPathCap);

}  // namespace trackpath
