#include "trackpath/disjoint_paths.hpp"

#include <string>
#include <unordered_set>
#include <utility>

#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

struct StateKey {
  std::size_t pair_index;
  VertexMask used;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept { return k.used.hash() * 31 + k.pair_index; }
};

void check_pairs(const GraphView& view, std::span<const EndpointPair> pairs, const DisjointPathOptions& options) {
  const auto n = view.graph().vertex_count();
  VertexMask seen(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [from, to] = pairs[i];
    if (from >= n || to >= n) throw PreconditionError("endpoint out of range in pair " + std::to_string(i));
    if (from == to && !options.allow_trivial)
      throw PreconditionError("pair " + std::to_string(i) + " has equal endpoints");
    if (seen.test(from) || (to != from && seen.test(to)))
      throw PreconditionError("pairs share an endpoint (pair " + std::to_string(i) + ")");
    seen.set(from);
    seen.set(to);
  }
}

class Search {
 public:
  Search(const GraphView& view, std::span<const EndpointPair> pairs, std::size_t limit)
      : view_(view), graph_(view.graph()), pairs_(pairs), limit_(limit), used_(graph_.vertex_count()),
        reserved_(graph_.vertex_count()) {
    for (const auto& p : pairs_) {
      reserved_.set(p.from);
      reserved_.set(p.to);
    }
  }

  std::vector<DisjointPathSystem> run() {
    for (const auto& p : pairs_)
      if (!view_.contains(p.from) || !view_.contains(p.to)) return {};
    partial_.resize(pairs_.size());
    solve(0);
    return std::move(found_);
  }

 private:
  bool allowed(VertexId w, std::size_t idx) const {
    return view_.contains(w) && !used_.test(w) && (!reserved_.test(w) || w == pairs_[idx].to);
  }

  // BFS from `start` towards pairs_[idx].to over vertices usable by pair idx.
  bool reachable(VertexId start, std::size_t idx) const {
    const VertexId goal = pairs_[idx].to;
    if (start == goal) return true;
    std::vector<VertexId> stack{start};
    VertexMask seen(graph_.vertex_count());
    seen.set(start);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : graph_.out_neighbors(x)) {
        if (seen.test(y) || !allowed(y, idx)) continue;
        if (y == goal) return true;
        seen.set(y);
        stack.push_back(y);
      }
    }
    return false;
  }

  bool pending_feasible(std::size_t idx) const {
    for (std::size_t j = idx + 1; j < pairs_.size(); ++j)
      if (!reachable(pairs_[j].from, j)) return false;
    return true;
  }

  // Returns true when the search should stop (limit reached).
  bool solve(std::size_t idx) {
    if (idx == pairs_.size()) {
      record();
      return found_.size() >= limit_;
    }
    StateKey key{idx, used_};
    if (failures_.contains(key)) return false;
    const std::size_t before = found_.size();
    const auto [from, to] = pairs_[idx];
    used_.set(from);
    partial_[idx].vertices.assign(1, from);
    bool stop = false;
    if (from == to) {
      if (pending_feasible(idx)) stop = solve(idx + 1);
    } else {
      stop = extend(idx, from);
    }
    used_.reset(from);
    if (!stop && found_.size() == before) failures_.insert(std::move(key));
    return stop;
  }

  bool extend(std::size_t idx, VertexId at) {
    if (!reachable(at, idx) || !pending_feasible(idx)) return false;
    auto& path = partial_[idx].vertices;
    for (auto w : graph_.out_neighbors(at)) {
      if (!allowed(w, idx)) continue;
      used_.set(w);
      path.push_back(w);
      const bool stop = (w == pairs_[idx].to) ? solve(idx + 1) : extend(idx, w);
      path.pop_back();
      used_.reset(w);
      if (stop) return true;
    }
    return false;
  }

  void record() {
    DisjointPathSystem system{partial_};
    verify(system);
    found_.push_back(std::move(system));
  }

  // Soundness self-check on every system before it leaves the engine.
  void verify(const DisjointPathSystem& system) const {
    VertexMask seen(graph_.vertex_count());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& vs = system.paths[i].vertices;
      bool ok = !vs.empty() && vs.front() == pairs_[i].from && vs.back() == pairs_[i].to;
      for (std::size_t k = 0; ok && k < vs.size(); ++k) {
        ok = view_.contains(vs[k]) && !seen.test(vs[k]) && (k == 0 || graph_.has_edge(vs[k - 1], vs[k]));
        seen.set(vs[k]);
      }
      if (!ok) throw InvariantViolation("disjoint path engine produced an invalid system");
    }
  }

  const GraphView& view_;
  const StGraph& graph_;
  std::span<const EndpointPair> pairs_;
  std::size_t limit_;
  VertexMask used_;
  VertexMask reserved_;
  std::vector<Path> partial_;
  std::vector<DisjointPathSystem> found_;
  std::unordered_set<StateKey, StateKeyHash> failures_;
};

}  // namespace

std::vector<DisjointPathSystem> enumerate_disjoint_paths(const GraphView& g, std::span<const EndpointPair> pairs,
                                                         std::size_t limit, DisjointPathOptions options) {
  check_pairs(g, pairs, options);
  if (limit == 0) return {};
  return Search(g, pairs, limit).run();
}

std::optional<DisjointPathSystem> k_disjoint_paths(const GraphView& g, std::span<const EndpointPair> pairs,
                                                   DisjointPathOptions options) {
  auto systems = enumerate_disjoint_paths(g, pairs, 1, options);
  if (systems.empty()) return std::nullopt;
  return std::move(systems.front());
}

std::optional<DisjointPathSystem> two_disjoint_paths(const GraphView& g, EndpointPair first, EndpointPair second,
                                                     DisjointPathOptions options) {
  const EndpointPair pairs[] = {first, second};
  return k_disjoint_paths(g, pairs, options);
}

}  // namespace trackpath
