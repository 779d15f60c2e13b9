#pragma once

// Small named instances used across the unit tests.

#include <vector>

#include "trackpath/graph.hpp"

namespace fixtures {

using trackpath::Direction;
using trackpath::Edge;
using trackpath::StGraph;
using trackpath::VertexId;

// s=0, t=1, x=2; edges st, sx, xt.
inline StGraph triangle() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {2, 1}};
  return StGraph(3, Direction::undirected, 0, 1, e);
}

namespace diamond_ids {
inline constexpr VertexId s = 0, a = 1, t = 2, b = 3;
}

// Chordless 4-cycle s-a-t-b-s.
inline StGraph diamond(std::vector<Edge> extra = {}, std::size_t n = 4) {
  using namespace diamond_ids;
  std::vector<Edge> e{{s, a}, {a, t}, {t, b}, {b, s}};
  e.insert(e.end(), extra.begin(), extra.end());
  return StGraph(n, Direction::undirected, s, t, e);
}

inline StGraph diamond_chorded() { return diamond({{diamond_ids::a, diamond_ids::b}}); }

namespace tour4_ids {
inline constexpr VertexId s = 0, a = 1, b = 2, t = 3;
}

// Transitive tournament on s < a < b < t.
inline StGraph tour4(std::vector<Edge> drop = {}, std::vector<Edge> extra = {}, std::size_t n = 4) {
  using namespace tour4_ids;
  std::vector<Edge> e;
  for (Edge arc : std::vector<Edge>{{s, a}, {s, b}, {s, t}, {a, b}, {a, t}, {b, t}}) {
    bool skip = false;
    for (auto d : drop) skip = skip || d == arc;
    if (!skip) e.push_back(arc);
  }
  e.insert(e.end(), extra.begin(), extra.end());
  return StGraph(n, Direction::directed, s, t, e);
}

// FAN(n): s=0, t=1, hub x=2, path s - v1 - ... - v_{n-3} - t with v_i = i+2,
// x adjacent to every other vertex.
inline StGraph fan(std::size_t n) {
  std::vector<Edge> e;
  std::vector<VertexId> spine{0};
  for (VertexId v = 3; v < n; ++v) spine.push_back(v);
  spine.push_back(1);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) e.push_back({spine[i], spine[i + 1]});
  for (VertexId v : spine) e.push_back({2, v});
  return StGraph(n, Direction::undirected, 0, 1, e);
}

}  // namespace fixtures
