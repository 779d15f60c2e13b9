#pragma once

#include <algorithm>
#include <vector>

#include "trackpath/forcing.hpp"
#include "trackpath/preprocess.hpp"

namespace trackpath::detail {

// Marks every candidate x of an edge (a, b) whose edge survives in G - x.
// `candidates(a, b)` returns the detour vertices for that edge in ascending order.
template <class Candidates>
TrackingSet mark_forced(const StGraph& reduced, Candidates candidates, const ForcingOptions& options) {
  TrackingSet marked;
  std::vector<Edge> edges = reduced.edges();
  if (options.reverse_order) std::reverse(edges.begin(), edges.end());
  const GraphView whole(reduced);
  for (const auto& e : edges) {
    std::vector<VertexId> xs = candidates(e.u, e.v);
    if (options.reverse_order) std::reverse(xs.begin(), xs.end());
    for (auto x : xs) {
      if (options.skip_marked && marked.contains(x)) continue;
      if (edge_on_st_path(whole.without(x), e.u, e.v)) marked.insert(x);
    }
  }
  return marked;
}

inline std::vector<VertexId> sorted_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace trackpath::detail
