#include "trackpath/degree_bounded.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "trackpath/errors.hpp"
#include "trackpath/preprocess.hpp"

namespace trackpath {

namespace {

constexpr long double kZeroWeight = 1e-9L;

class LocalRatioFvs {
 public:
  explicit LocalRatioFvs(const StGraph& g) : g_(g), alive_(g.vertex_count(), true), weight_(g.vertex_count(), 1.0L) {}

  std::vector<VertexId> run() {
    cleanup();
    while (std::find(alive_.begin(), alive_.end(), true) != alive_.end()) {
      if (auto cycle = semidisjoint_cycle()) {
        long double gamma = std::numeric_limits<long double>::max();
        for (auto v : *cycle) gamma = std::min(gamma, weight_[v]);
        for (auto v : *cycle) weight_[v] -= gamma;
      } else {
        long double gamma = std::numeric_limits<long double>::max();
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
          if (alive_[v]) gamma = std::min(gamma, weight_[v] / static_cast<long double>(degree(v) - 1));
        std::vector<long double> cut(g_.vertex_count(), 0.0L);
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
          if (alive_[v]) cut[v] = gamma * static_cast<long double>(degree(v) - 1);
        for (VertexId v = 0; v < g_.vertex_count(); ++v) weight_[v] -= cut[v];
      }
      for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (alive_[v] && weight_[v] <= kZeroWeight) {
          alive_[v] = false;
          stack_.push_back(v);
        }
      }
      cleanup();
    }
    return reverse_delete();
  }

 private:
  std::size_t degree(VertexId v) const {
    std::size_t d = 0;
    for (auto w : g_.neighbors(v)) d += alive_[w] ? 1 : 0;
    return d;
  }

  void cleanup() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (alive_[v] && degree(v) <= 1) {
          alive_[v] = false;
          changed = true;
        }
      }
    }
  }

  // A maximal run of degree-2 vertices either closes on itself or hangs off a
  // single vertex x at both ends; either way it is a semidisjoint cycle.
  std::optional<std::vector<VertexId>> semidisjoint_cycle() const {
    const auto n = g_.vertex_count();
    std::vector<bool> deg2(n, false);
    for (VertexId v = 0; v < n; ++v) deg2[v] = alive_[v] && degree(v) == 2;
    std::vector<bool> seen(n, false);
    for (VertexId root = 0; root < n; ++root) {
      if (!deg2[root] || seen[root]) continue;
      std::vector<VertexId> run{root};
      seen[root] = true;
      std::vector<VertexId> outside;
      for (std::size_t i = 0; i < run.size(); ++i) {
        for (auto w : g_.neighbors(run[i])) {
          if (!alive_[w]) continue;
          if (deg2[w]) {
            if (!seen[w]) {
              seen[w] = true;
              run.push_back(w);
            }
          } else {
            outside.push_back(w);
          }
        }
      }
      if (outside.empty()) return run;
      if (outside.size() == 2 && outside[0] == outside[1]) {
        run.push_back(outside[0]);
        return run;
      }
    }
    return std::nullopt;
  }

  std::vector<VertexId> reverse_delete() const {
    std::vector<bool> in_set(g_.vertex_count(), false);
    for (auto v : stack_) in_set[v] = true;
    auto acyclic_without = [&](const std::vector<bool>& set) {
      VertexMask removed(g_.vertex_count());
      for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (set[v]) removed.set(v);
      return is_acyclic(GraphView(g_, removed));
    };
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      in_set[*it] = false;
      if (!acyclic_without(in_set)) in_set[*it] = true;
    }
    std::vector<VertexId> members;
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (in_set[v]) members.push_back(v);
    if (!acyclic_without(in_set)) throw InvariantViolation("local-ratio FVS left a cycle");
    return members;
  }

  const StGraph& g_;
  std::vector<bool> alive_;
  std::vector<long double> weight_;
  std::vector<VertexId> stack_;
};

}  // namespace

FvsResult fvs_2approx(const StGraph& g) {
  if (g.directed()) throw ClassMismatchError("feedback vertex set approximation needs an undirected graph");
  return FvsResult{LocalRatioFvs(g).run(), 2};
}

TrackingSet track_bounded_degree(const StGraph& g) {
  if (g.directed()) throw ClassMismatchError("bounded-degree tracking needs an undirected graph");
  const auto reduced = reduce(g);
  const auto& h = reduced.graph;
  const auto fvs = fvs_2approx(h);
  TrackingSet marked;
  for (auto v : fvs.members) {
    marked.insert(v);
    for (auto w : h.neighbors(v)) marked.insert(w);
  }
  std::vector<VertexId> members;
  for (auto v : marked.members())
    if (v != h.source() && v != h.target()) members.push_back(v);
  return TrackingSet(std::move(members));
}

}  // namespace trackpath
