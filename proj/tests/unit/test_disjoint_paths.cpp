#include <doctest.h>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "trackpath/disjoint_paths.hpp"
#include "trackpath/errors.hpp"

using namespace trackpath;

namespace {

// Paths join their pairs, follow edges, and share no vertex.
bool valid_system(const StGraph& g, const std::vector<EndpointPair>& pairs, const DisjointPathSystem& sys,
                  const VertexMask& removed) {
  if (sys.paths.size() != pairs.size()) return false;
  std::vector<int> used(g.vertex_count(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = sys.paths[i].vertices;
    if (p.empty() || p.front() != pairs[i].from || p.back() != pairs[i].to) return false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (!g.has_edge(p[j], p[j + 1])) return false;
    for (auto v : p)
      if (removed.test(v) || used[v]++) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("two disjoint paths examples") {
  using namespace fixtures::diamond_ids;
  auto g = fixtures::diamond();
  auto sys = two_disjoint_paths(g, {s, a}, {b, t});
  REQUIRE(sys);
  CHECK(sys->paths[0].vertices == std::vector<VertexId>{s, a});
  CHECK(sys->paths[1].vertices == std::vector<VertexId>{b, t});

  auto tri = fixtures::triangle();
  CHECK_THROWS_AS(two_disjoint_paths(tri, {0, 2}, {2, 1}), PreconditionError);

  std::vector<Edge> line{{0, 2}, {2, 1}};
  StGraph path(3, Direction::undirected, 0, 1, line);
  CHECK_THROWS_AS(two_disjoint_paths(path, {0, 2}, {2, 1}), PreconditionError);

  // Two K2 components: s-m and u-t.
  std::vector<Edge> split{{0, 2}, {3, 1}};
  StGraph parts(4, Direction::undirected, 0, 1, split);
  CHECK_FALSE(two_disjoint_paths(parts, {0, 1}, {2, 3}));
}

TEST_CASE("k disjoint paths examples") {
  using namespace fixtures::diamond_ids;
  auto g = fixtures::diamond();
  std::vector<EndpointPair> single{{s, t}};
  auto sys = k_disjoint_paths(g, single);
  REQUIRE(sys);
  // Ascending neighbour order reaches a before b.
  CHECK(sys->paths[0].vertices == std::vector<VertexId>{s, a, t});

  // 6-cycle s-u1-u2-t-u3-u4-s with ids s=0,t=1,u1=2,u2=3,u3=4,u4=5.
  std::vector<Edge> ring{{0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 0}};
  StGraph c6(6, Direction::undirected, 0, 1, ring);
  std::vector<EndpointPair> pairs{{0, 3}, {4, 1}};
  auto found = k_disjoint_paths(c6, pairs);
  REQUIRE(found);
  CHECK(found->paths[0].vertices == std::vector<VertexId>{0, 2, 3});
  CHECK(found->paths[1].vertices == std::vector<VertexId>{4, 1});
  CHECK(brute::disjoint_paths_exist(c6, {{0, 3}, {4, 1}}));
  // Crossing pairs on a cycle cannot be routed.
  std::vector<EndpointPair> crossing{{0, 1}, {2, 4}};
  CHECK_FALSE(k_disjoint_paths(c6, crossing));
  CHECK_FALSE(brute::disjoint_paths_exist(c6, {{0, 1}, {2, 4}}));

  std::vector<EndpointPair> shared{{0, 3}, {3, 1}};
  CHECK_THROWS_AS(k_disjoint_paths(c6, shared), PreconditionError);
}

TEST_CASE("trivial pairs need explicit permission") {
  auto g = fixtures::diamond();
  std::vector<EndpointPair> pairs{{0, 0}, {1, 2}};
  CHECK_THROWS_AS(k_disjoint_paths(g, pairs), PreconditionError);
  auto sys = k_disjoint_paths(g, pairs, {.allow_trivial = true});
  REQUIRE(sys);
  CHECK(sys->paths[0].vertices == std::vector<VertexId>{0});
}

TEST_CASE("masked vertices are avoided") {
  using namespace fixtures::diamond_ids;
  auto g = fixtures::diamond();
  VertexMask gone(4);
  gone.set(a);
  std::vector<EndpointPair> single{{s, t}};
  auto sys = k_disjoint_paths(GraphView(g, gone), single);
  REQUIRE(sys);
  CHECK(sys->paths[0].vertices == std::vector<VertexId>{s, b, t});
  gone.set(b);
  CHECK_FALSE(k_disjoint_paths(GraphView(g, gone), single));
  gone.set(s);
  CHECK_FALSE(k_disjoint_paths(GraphView(g, gone), single));
}

TEST_CASE("engine agrees with exhaustive path tuples") {
  gen::Rng rng(7);
  int found = 0;
  for (int round = 0; round < 600; ++round) {
    const auto n = gen::uniform(rng, 4, 9);
    const auto dir = round % 3 == 0 ? Direction::directed : Direction::undirected;
    auto g = gen::gnp(rng, n, dir == Direction::directed ? 0.35 : 0.3, dir);
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::shuffle(vs.begin(), vs.end(), rng);
    const auto k = gen::uniform(rng, 1, std::min<std::size_t>(3, n / 2));
    std::vector<EndpointPair> pairs;
    std::vector<std::pair<VertexId, VertexId>> plain;
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({vs[2 * i], vs[2 * i + 1]});
      plain.emplace_back(vs[2 * i], vs[2 * i + 1]);
    }
    VertexMask removed(n);
    std::vector<bool> blocked(n, false);
    for (std::size_t i = 2 * k; i < n; ++i)
      if (gen::coin(rng, 0.15)) removed.set(vs[i]), blocked[vs[i]] = true;
    auto sys = k_disjoint_paths(GraphView(g, removed), pairs);
    REQUIRE(sys.has_value() == brute::disjoint_paths_exist(g, plain, blocked));
    if (sys) {
      ++found;
      CHECK(valid_system(g, pairs, *sys, removed));
      CHECK(k_disjoint_paths(GraphView(g, removed), pairs) == sys);
    }
  }
  CHECK(found > 100);
}

TEST_CASE("enumeration lists distinct valid systems") {
  using namespace fixtures::diamond_ids;
  auto g = fixtures::diamond_chorded();
  std::vector<EndpointPair> single{{s, t}};
  auto all = enumerate_disjoint_paths(g, single, 10);
  CHECK(all.size() == 4);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  CHECK(enumerate_disjoint_paths(g, single, 2).size() == 2);
}
