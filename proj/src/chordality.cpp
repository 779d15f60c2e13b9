#include "trackpath/chordality.hpp"

#include <algorithm>
#include <queue>

#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

// Plain O(n^2) lexicographic BFS: labels are compared lexicographically, the
// vertex with the largest label is visited next (ties go to the smaller id).
std::vector<VertexId> lex_bfs(const StGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<VertexId> best;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!best || label[v] > label[*best]) best = v;
    }
    visited[*best] = true;
    order.push_back(*best);
    for (auto w : g.neighbors(*best))
      if (!visited[w]) label[w].push_back(n - step);
  }
  return order;
}

// Some vertex v with two non-adjacent neighbors a, b that stay connected once
// the rest of N[v] is deleted yields a chordless cycle v, a, ..., b through a
// shortest a-b path. Every non-chordal graph has such a triple.
std::vector<VertexId> find_chordless_cycle(const StGraph& g) {
  const auto n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const VertexId a = nv[i];
        const VertexId b = nv[j];
        if (g.has_edge(a, b)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (auto w : nv)
          if (w != a && w != b) blocked[w] = true;
        std::vector<std::optional<VertexId>> parent(n);
        std::vector<bool> seen(n, false);
        std::queue<VertexId> queue;
        queue.push(a);
        seen[a] = true;
        while (!queue.empty() && !seen[b]) {
          auto x = queue.front();
          queue.pop();
          for (auto y : g.neighbors(x)) {
            if (blocked[y] || seen[y]) continue;
            seen[y] = true;
            parent[y] = x;
            queue.push(y);
          }
        }
        if (!seen[b]) continue;
        std::vector<VertexId> tail;
        for (VertexId x = b; x != a; x = *parent[x]) tail.push_back(x);
        std::vector<VertexId> cycle{v, a};
        cycle.insert(cycle.end(), tail.rbegin(), tail.rend());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

bool is_perfect_elimination_ordering(const StGraph& g, const std::vector<VertexId>& order) {
  const auto n = g.vertex_count();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> later;
    for (auto w : g.neighbors(v))
      if (position[w] > position[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.has_edge(later[i], later[j])) return false;
  }
  return true;
}

ChordalityResult is_chordal(const StGraph& g) {
  if (g.directed()) throw ClassMismatchError("chordality is defined for undirected graphs");
  ChordalityResult result;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_ordering(g, order)) {
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
  }
  result.chordless_cycle = find_chordless_cycle(g);
  if (result.chordless_cycle.size() < 4)
    throw InvariantViolation("lexicographic BFS rejected the graph but no chordless cycle exists");
  return result;
}

}  // namespace trackpath
