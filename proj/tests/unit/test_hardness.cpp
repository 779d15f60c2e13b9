#include <doctest.h>

#include "../support/brute.hpp"
#include "../support/hardness_check.hpp"
#include "trackpath/errors.hpp"
#include "trackpath/hardness.hpp"
#include "trackpath/oracle.hpp"

using namespace trackpath;

namespace {

VcSource source(std::size_t n, std::vector<Edge> edges) { return VcSource{n, std::move(edges)}; }

std::size_t source_max_degree(const VcSource& src) {
  std::vector<std::size_t> deg(src.vertex_count, 0);
  for (const auto& e : src.edges) ++deg[e.u], ++deg[e.v];
  return *std::max_element(deg.begin(), deg.end());
}

}  // namespace

TEST_CASE("single edge source") {
  auto inst = vc_to_tracking_instance(source(2, {{0, 1}}));
  CHECK(inst.graph.vertex_count() == 4);
  CHECK(inst.forced_count == 0);
  CHECK(inst.grid_vertices.empty());
  CHECK(inst.e_map.size() == 1);
  CHECK(min_tracking_set(inst.graph).size() == 1 + inst.forced_count);
  CHECK(inst.closed_form_count() == 2);
}

TEST_CASE("path source") {
  auto inst = vc_to_tracking_instance(source(3, {{0, 1}, {1, 2}}));
  CHECK(inst.forced_count == 4);
  auto best = min_tracking_set(inst.graph);
  CHECK(best.size() == 1 + inst.forced_count);
  CHECK(best.contains(inst.v_map[1]));
  for (auto w : inst.grid_vertices) CHECK(best.contains(w));
}

TEST_CASE("triangle source") {
  auto inst = vc_to_tracking_instance(source(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(inst.forced_count == 10);
  CHECK(inst.closed_form_count() == 16);
  auto outcome = hardness_check::analyse(inst);
  CHECK(outcome.all_forced);
  CHECK(outcome.min_extra == 2);
}

TEST_CASE("gadget structure") {
  auto src = source(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  auto inst = vc_to_tracking_instance(src);
  const auto& g = inst.graph;
  const auto m = src.edges.size();
  CHECK(inst.forced_count == m * m + m - 2);
  CHECK(inst.grid_vertices.size() == inst.forced_count);
  for (std::size_t i = 0; i < m; ++i) {
    auto [vi, vi2] = inst.e_map[i];
    for (auto end : {src.edges[i].u, src.edges[i].v}) {
      CHECK(g.has_edge(vi, inst.v_map[end]));
      CHECK(g.has_edge(vi2, inst.v_map[end]));
    }
  }
  for (std::size_t a = 0; a < src.vertex_count; ++a) CHECK(g.degree(inst.v_map[a]) <= 2 * source_max_degree(src));
  std::vector<bool> edge_row(g.vertex_count(), false);
  for (auto [vi, vi2] : inst.e_map) edge_row[vi] = edge_row[vi2] = true;
  for (auto w : inst.grid_vertices)
    if (!edge_row[w]) CHECK(g.degree(w) <= 6);
  CHECK(max_degree(g) <= std::max<std::size_t>(6, 2 * source_max_degree(src)));
}

TEST_CASE("degenerate sources are rejected") {
  CHECK_THROWS_AS(vc_to_tracking_instance(source(3, {})), PreconditionError);
  CHECK_THROWS_AS(vc_to_tracking_instance(source(3, {{1, 1}})), PreconditionError);
  CHECK_THROWS_AS(vc_to_tracking_instance(source(3, {{0, 1}, {1, 0}})), PreconditionError);
  CHECK_THROWS_AS(vc_to_tracking_instance(source(2, {{0, 4}})), PreconditionError);
}

TEST_CASE("cover size relation on all two-edge sources") {
  for (const auto& src : hardness_check::small_sources(4, 2)) {
    auto inst = vc_to_tracking_instance(src);
    auto outcome = hardness_check::analyse(inst);
    CHECK(outcome.all_forced);
    CHECK(outcome.min_extra == brute::min_vertex_cover(src.vertex_count, src.edges));
  }
}
