#include "trackpath/edge_tracker.hpp"

#include <algorithm>
#include <numeric>

#include "trackpath/errors.hpp"
#include "trackpath/preprocess.hpp"

namespace trackpath {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

}  // namespace

std::vector<EdgeId> max_weight_spanning_tree(const WeightedMultigraph& g) {
  std::vector<const WeightedEdge*> order;
  for (const auto& e : g.edges()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const WeightedEdge* a, const WeightedEdge* b) {
    if (a->weight != b->weight) return a->weight > b->weight;
    return a->id < b->id;
  });
  DisjointSets sets(g.vertex_count());
  std::vector<EdgeId> tree;
  for (const auto* e : order)
    if (sets.unite(e->u, e->v)) tree.push_back(e->id);
  std::sort(tree.begin(), tree.end());
  return tree;
}

TrackingEdgeSet track_edges(const WeightedMultigraph& g) {
  for (const auto& e : g.edges())
    if (e.weight < 0) throw PreconditionError("edge " + std::to_string(e.id) + " has negative weight");
  const auto reduced = reduce(g);
  const auto tree = max_weight_spanning_tree(reduced.graph);
  TrackingEdgeSet result;
  result.normalized = !reduced.removed_edges.empty() || !reduced.removed_vertices.empty();
  for (const auto& e : reduced.graph.edges()) {
    if (std::binary_search(tree.begin(), tree.end(), e.id)) continue;
    result.members.push_back(e.id);
    result.total_weight += e.weight;
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

}  // namespace trackpath
