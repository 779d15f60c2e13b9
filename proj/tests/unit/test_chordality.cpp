#include <doctest.h>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "trackpath/chordality.hpp"
#include "trackpath/errors.hpp"

using namespace trackpath;

namespace {

// A witness must be a cycle of length >= 4 with no chord.
bool chordless_cycle(const StGraph& g, const std::vector<VertexId>& c) {
  const auto k = c.size();
  if (k < 4) return false;
  std::vector<VertexId> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("chordality examples") {
  CHECK(is_chordal(fixtures::triangle()).chordal);
  CHECK(is_chordal(fixtures::fan(5)).chordal);
  CHECK(is_chordal(fixtures::diamond_chorded()).chordal);

  auto g = fixtures::diamond();
  auto r = is_chordal(g);
  CHECK_FALSE(r.chordal);
  CHECK(chordless_cycle(g, r.chordless_cycle));
  CHECK(r.chordless_cycle.size() == 4);
}

TEST_CASE("chordality rejects directed input") {
  CHECK_THROWS_AS(is_chordal(fixtures::tour4()), ClassMismatchError);
}

TEST_CASE("elimination orderings") {
  auto g = fixtures::fan(6);
  auto r = is_chordal(g);
  REQUIRE(r.chordal);
  CHECK(r.elimination_order.size() == g.vertex_count());
  CHECK(is_perfect_elimination_ordering(g, r.elimination_order));
  // Eliminating the hub first leaves a non-clique neighbourhood.
  std::vector<VertexId> bad{2, 0, 1, 3, 4, 5};
  CHECK_FALSE(is_perfect_elimination_ordering(g, bad));
}

TEST_CASE("is_chordal agrees with brute-force cycle search") {
  gen::Rng rng(2024);
  int chordal_seen = 0;
  for (int round = 0; round < 400; ++round) {
    const auto n = gen::uniform(rng, 3, 9);
    auto g = round % 2 ? gen::chordal(rng, n, 3) : gen::gnp(rng, n, 0.45);
    auto r = is_chordal(g);
    REQUIRE(r.chordal == brute::chordal(g));
    if (r.chordal) {
      ++chordal_seen;
      CHECK(is_perfect_elimination_ordering(g, r.elimination_order));
      auto order = r.elimination_order;
      std::sort(order.begin(), order.end());
      for (VertexId v = 0; v < n; ++v) CHECK(order[v] == v);
    } else {
      CHECK(chordless_cycle(g, r.chordless_cycle));
    }
  }
  CHECK(chordal_seen > 200);
}

TEST_CASE("later neighbours in a perfect elimination ordering form a clique") {
  gen::Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    auto g = gen::chordal(rng, gen::uniform(rng, 2, 10), 4);
    auto r = is_chordal(g);
    REQUIRE(r.chordal);
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < r.elimination_order.size(); ++i) pos[r.elimination_order[i]] = i;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<VertexId> later;
      for (auto w : g.neighbors(v))
        if (pos[w] > pos[v]) later.push_back(w);
      for (auto x : later)
        for (auto y : later)
          if (x != y) CHECK(g.has_edge(x, y));
    }
  }
}
