#include "trackpath/hardness.hpp"

#include <algorithm>

#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

class Builder {
 public:
  VertexId add(std::string name) {
    names.push_back(std::move(name));
    return static_cast<VertexId>(names.size() - 1);
  }
  void connect(VertexId a, VertexId b) { edges.push_back({a, b}); }

  std::vector<std::string> names;
  std::vector<Edge> edges;
};

// Rows 0..q of a triangular grid rooted at `apex`; row q must have q+1
// vertices and is supplied as `last_row`. Vertex j of row i is joined to
// vertices j and j+1 of row i+1 and to vertex j+1 of row i.
std::vector<VertexId> build_grid(Builder& b, VertexId apex, const std::vector<VertexId>& last_row,
                                 const std::string& prefix) {
  const std::size_t q = last_row.size() - 1;
  std::vector<std::vector<VertexId>> rows;
  rows.push_back({apex});
  std::vector<VertexId> inner;
  for (std::size_t i = 1; i < q; ++i) {
    std::vector<VertexId> row;
    for (std::size_t j = 0; j <= i; ++j) {
      row.push_back(b.add(prefix + std::to_string(i) + "_" + std::to_string(j)));
      inner.push_back(row.back());
    }
    rows.push_back(std::move(row));
  }
  if (q > 0) rows.push_back(last_row);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size()) b.connect(rows[i][j], rows[i][j + 1]);
      if (i + 1 < rows.size()) {
        b.connect(rows[i][j], rows[i + 1][j]);
        b.connect(rows[i][j], rows[i + 1][j + 1]);
      }
    }
  }
  return inner;
}

}  // namespace

std::size_t ReductionInstance::closed_form_count() const {
  const std::size_t m = e_map.size();
  return m * m + 3 * m - 2;
}

ReductionInstance vc_to_tracking_instance(const VcSource& source) {
  const auto& src_edges = source.edges;
  if (src_edges.empty()) throw PreconditionError("vertex cover source has no edges");
  for (const auto& e : src_edges) {
    if (e.u >= source.vertex_count || e.v >= source.vertex_count)
      throw PreconditionError("source edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("source graph has a self loop");
  }
  {
    std::vector<Edge> canon;
    for (const auto& e : src_edges) canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
      throw PreconditionError("source graph has parallel edges");
  }

  const std::size_t m = src_edges.size();
  Builder b;
  const VertexId s = b.add("s");
  const VertexId t = b.add("t");
  ReductionInstance inst{StGraph(2, Direction::undirected, s, t, {}), {}, {}, {}, {}, 0};
  for (std::size_t a = 0; a < source.vertex_count; ++a) inst.v_map.push_back(b.add("x" + std::to_string(a)));

  std::vector<VertexId> ve;
  std::vector<VertexId> ve_prime;
  if (m == 1) {
    ve.push_back(s);
    ve_prime.push_back(t);
  } else {
    for (std::size_t i = 0; i < m; ++i) ve.push_back(b.add("e" + std::to_string(i)));
    for (std::size_t i = 0; i < m; ++i) ve_prime.push_back(b.add("f" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    inst.e_map.emplace_back(ve[i], ve_prime[i]);
    for (auto end : {src_edges[i].u, src_edges[i].v}) {
      b.connect(ve[i], inst.v_map[end]);
      b.connect(ve_prime[i], inst.v_map[end]);
    }
  }

  auto inner1 = build_grid(b, s, ve, "g");
  auto inner2 = build_grid(b, t, ve_prime, "h");
  if (m > 1) {
    inst.grid_vertices = ve;
    inst.grid_vertices.insert(inst.grid_vertices.end(), ve_prime.begin(), ve_prime.end());
  }
  inst.grid_vertices.insert(inst.grid_vertices.end(), inner1.begin(), inner1.end());
  inst.grid_vertices.insert(inst.grid_vertices.end(), inner2.begin(), inner2.end());
  std::sort(inst.grid_vertices.begin(), inst.grid_vertices.end());
  inst.forced_count = inst.grid_vertices.size();

  inst.graph = StGraph(b.names.size(), Direction::undirected, s, t, b.edges);
  inst.names = std::move(b.names);
  return inst;
}

}  // namespace trackpath
