#include "trackpath/forcing.hpp"

#include <algorithm>

#include "trackpath/preprocess.hpp"

namespace trackpath {

std::optional<ForcedWitness> forced_witness(const StGraph& g, VertexId x) {
  if (x == g.source() || x == g.target()) return std::nullopt;
  const GraphView minus_x = GraphView(g).without(x);
  for (const auto& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    // has_edge is symmetric for undirected graphs, so this covers both cases.
    if (!g.has_edge(e.u, x) || !g.has_edge(x, e.v)) continue;
    auto path = st_path_through_edge(minus_x, e.u, e.v);
    if (!path) continue;
    ForcedWitness w{x, e, *path, *path};
    auto& vs = w.with_vertex.vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const bool hit = (vs[i] == e.u && vs[i + 1] == e.v) || (!g.directed() && vs[i] == e.v && vs[i + 1] == e.u);
      if (hit) {
        vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, x);
        break;
      }
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace trackpath
