#include "trackpath/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "trackpath/disjoint_paths.hpp"
#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw ResourceError("more than " + std::to_string(cap) + " paths (raise the path cap)");
}

// Simple paths from `from` to `to`; `inner_ok(v)` filters intermediate vertices.
template <class InnerOk>
void collect_paths(const StGraph& g, VertexId from, VertexId to, InnerOk inner_ok, std::size_t cap,
                   std::vector<Path>& out) {
  Path current{{from}, {}};
  VertexMask on_path(g.vertex_count());
  on_path.set(from);
  auto dfs = [&](auto& self, VertexId at) -> void {
    for (auto w : g.out_neighbors(at)) {
      if (on_path.test(w)) continue;
      if (w == to) {
        current.vertices.push_back(w);
        if (out.size() >= cap) cap_exceeded(cap);
        out.push_back(current);
        current.vertices.pop_back();
        continue;
      }
      if (!inner_ok(w)) continue;
      on_path.set(w);
      current.vertices.push_back(w);
      self(self, w);
      current.vertices.pop_back();
      on_path.reset(w);
    }
  };
  dfs(dfs, from);
}

// Exact byte encoding of the kept part of a sequence; short keys stay in SSO.
class SequenceKey {
 public:
  explicit SequenceKey(std::size_t universe) : wide_(universe > 255) {}

  template <class Keep>
  const std::string& encode(const std::vector<VertexId>& seq, Keep keep) {
    buffer_.clear();
    for (auto v : seq) {
      if (!keep(v)) continue;
      if (wide_) {
        for (int shift = 0; shift < 32; shift += 8) buffer_.push_back(static_cast<char>((v >> shift) & 0xFF));
      } else {
        buffer_.push_back(static_cast<char>(v));
      }
    }
    return buffer_;
  }

 private:
  bool wide_;
  std::string buffer_;
};

// Index pair of the first two sequences that agree on their kept elements.
template <class Keep>
std::optional<std::pair<std::size_t, std::size_t>> first_collision(const std::vector<std::vector<VertexId>>& seqs,
                                                                   std::size_t universe, Keep keep) {
  SequenceKey key(universe);
  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(seqs.size() * 2);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    auto [it, inserted] = seen.try_emplace(key.encode(seqs[i], keep), i);
    if (!inserted) return std::pair{it->second, i};
  }
  return std::nullopt;
}

std::vector<std::vector<VertexId>> vertex_sequences(const std::vector<Path>& paths) {
  std::vector<std::vector<VertexId>> seqs;
  seqs.reserve(paths.size());
  for (const auto& p : paths) seqs.push_back(p.vertices);
  return seqs;
}

}  // namespace

std::vector<Path> enumerate_st_paths(const StGraph& g, std::size_t cap) {
  std::vector<Path> out;
  collect_paths(g, g.source(), g.target(), [](VertexId) { return true; }, cap, out);
  return out;
}

std::vector<Path> enumerate_st_paths(const WeightedMultigraph& g, std::size_t cap) {
  std::vector<Path> out;
  Path current{{g.source()}, {}};
  VertexMask on_path(g.vertex_count());
  on_path.set(g.source());
  auto dfs = [&](auto& self, VertexId at) -> void {
    for (auto pos : g.incident(at)) {
      const auto& e = g.edges()[pos];
      const VertexId w = e.u == at ? e.v : e.u;
      if (on_path.test(w)) continue;
      current.vertices.push_back(w);
      current.edges.push_back(e.id);
      if (w == g.target()) {
        if (out.size() >= cap) cap_exceeded(cap);
        out.push_back(current);
      } else {
        on_path.set(w);
        self(self, w);
        on_path.reset(w);
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  dfs(dfs, g.source());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport is_tracking_set(const StGraph& g, const TrackingSet& trackers, std::size_t cap) {
  const auto paths = enumerate_st_paths(g, cap);
  const auto mask = trackers.mask(g.vertex_count());
  VerificationReport report;
  if (auto hit = first_collision(vertex_sequences(paths), g.vertex_count(),
                                 [&](VertexId v) { return mask.test(v); })) {
    report.valid = false;
    report.witness = std::pair{paths[hit->first], paths[hit->second]};
  }
  return report;
}

VerificationReport condition_witness(const StGraph& g, const TrackingSet& trackers, std::size_t cap) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  const auto s = g.source();
  const auto t = g.target();
  const auto tracked = trackers.mask(n);
  VerificationReport report;
  for (VertexId u = 0; u < n; ++u) {
    if (u == t) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (v == u || v == s) continue;
      std::vector<Path> between;
      collect_paths(g, u, v, [&](VertexId w) { return w != s && w != t && !tracked.test(w); }, cap, between);
      if (between.size() < 2) continue;
      std::unordered_map<VertexMask, bool> extendable;
      for (std::size_t i = 0; i < between.size(); ++i) {
        for (std::size_t j = i + 1; j < between.size(); ++j) {
          VertexMask blocked(n);
          for (auto w : between[i].vertices) blocked.set(w);
          for (auto w : between[j].vertices) blocked.set(w);
          blocked.reset(u);
          blocked.reset(v);
          auto cached = extendable.find(blocked);
          if (cached != extendable.end() && !cached->second) continue;
          auto legs = two_disjoint_paths(GraphView(g, blocked), {s, u}, {v, t}, {.allow_trivial = true});
          extendable[blocked] = legs.has_value();
          if (!legs) continue;
          ConditionWitness w{u, v, between[i], between[j], legs->paths[0], legs->paths[1]};
          auto splice = [&](const Path& middle) {
            Path p = w.source_leg;
            p.vertices.insert(p.vertices.end(), middle.vertices.begin() + 1, middle.vertices.end());
            p.vertices.insert(p.vertices.end(), w.target_leg.vertices.begin() + 1, w.target_leg.vertices.end());
            return p;
          };
          report.valid = false;
          report.witness = std::pair{splice(w.first), splice(w.second)};
          report.condition_witness = std::move(w);
          return report;
        }
      }
    }
  }
  return report;
}

TrackingSet min_tracking_set(const StGraph& g, OracleLimits limits) {
  const auto n = g.vertex_count();
  if (n > limits.max_vertices)
    throw ResourceError("minimum tracking set search is limited to " + std::to_string(limits.max_vertices) +
                        " vertices, graph has " + std::to_string(n));
  const auto paths = enumerate_st_paths(g, limits.path_cap);
  const auto seqs = vertex_sequences(paths);
  std::vector<VertexId> universe;
  for (VertexId v = 0; v < n; ++v)
    if (v != g.source() && v != g.target()) universe.push_back(v);

  std::vector<bool> chosen(n, false);
  for (std::size_t k = 0; k <= universe.size(); ++k) {
    // Lexicographic k-combinations of `universe` via an index vector.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::fill(chosen.begin(), chosen.end(), false);
      for (auto i : idx) chosen[universe[i]] = true;
      if (!first_collision(seqs, n, [&](VertexId v) { return chosen[v]; })) {
        std::vector<VertexId> members;
        for (auto i : idx) members.push_back(universe[i]);
        return TrackingSet(std::move(members));
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == universe.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw InvariantViolation("all non-terminal vertices failed to form a tracking set");
}

VerificationReport is_tracking_edge_set(const WeightedMultigraph& g, const TrackingEdgeSet& trackers,
                                        std::size_t cap) {
  const auto paths = enumerate_st_paths(g, cap);
  EdgeId max_id = 0;
  for (const auto& e : g.edges()) max_id = std::max(max_id, e.id);
  std::vector<bool> tracked(static_cast<std::size_t>(max_id) + 1, false);
  for (auto id : trackers.members)
    if (id <= max_id) tracked[id] = true;
  std::vector<std::vector<VertexId>> seqs;
  seqs.reserve(paths.size());
  for (const auto& p : paths) seqs.push_back(p.edges);
  VerificationReport report;
  if (auto hit = first_collision(seqs, static_cast<std::size_t>(max_id) + 1,
                                 [&](EdgeId id) { return tracked[id]; })) {
    report.valid = false;
    report.witness = std::pair{paths[hit->first], paths[hit->second]};
  }
  return report;
}

}  // namespace trackpath
