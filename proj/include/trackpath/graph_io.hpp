#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

enum class GraphKind { undirected, directed, multigraph };

/// Parsed form of the text graph format:
///
///     # comment
///     graph <undirected|directed|multigraph>
///     vertices <n>
///     terminals <s> <t>
///     edge <u> <v> [<weight>]
///
/// Vertex tokens are names; ids are assigned in order of first appearance
/// (terminals first). Weights are required for multigraphs and rejected
/// otherwise. The number of distinct names must equal n.
struct GraphFile {
  struct EdgeLine {
    VertexId u;
    VertexId v;
    double weight = 0.0;
    std::size_t line = 0;
  };

  GraphKind kind = GraphKind::undirected;
  std::vector<std::string> names;
  std::optional<std::pair<VertexId, VertexId>> terminals;
  std::vector<EdgeLine> edges;

  /// Id of a vertex name; throws InputError when unknown.
  VertexId id_of(std::string_view name) const;
};

struct ParseOptions {
  /// Accept a file without a `terminals` line (Vertex Cover sources).
  bool terminals_optional = false;
};

/// Throws InputError with a 1-based line number on malformed input.
GraphFile parse_graph(std::istream& in, ParseOptions options = {});
GraphFile parse_graph_file(const std::string& path, ParseOptions options = {});

/// Validated conversions; structural errors are reported as InputError with
/// the offending line.
StGraph to_st_graph(const GraphFile& file);
WeightedMultigraph to_multigraph(const GraphFile& file);

/// Writes `g` in the text format. `keep(v)` selects the vertices to emit
/// (edges touching dropped vertices are skipped); ids are renumbered densely
/// by the reader, so names carry identity.
void write_graph(std::ostream& out, const StGraph& g, const std::vector<std::string>& names,
                 const std::vector<bool>& keep);
void write_graph(std::ostream& out, const WeightedMultigraph& g, const std::vector<std::string>& names,
                 const std::vector<bool>& keep);

}  // namespace trackpath
