#include "trackpath/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "trackpath/errors.hpp"

namespace trackpath {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw InputError("expected a vertex count, got '" + tok + "'", line);
  return value;
}

double parse_weight(const std::string& tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw InputError("expected a weight, got '" + tok + "'", line);
  return value;
}

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::undirected: return "undirected";
    case GraphKind::directed: return "directed";
    case GraphKind::multigraph: return "multigraph";
  }
  return "undirected";
}

}  // namespace

VertexId GraphFile::id_of(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown vertex '" + std::string(name) + "'");
  return static_cast<VertexId>(it - names.begin());
}

GraphFile parse_graph(std::istream& in, ParseOptions options) {
  GraphFile file;
  bool have_header = false;
  std::optional<std::size_t> declared;
  std::size_t declared_line = 0;
  std::unordered_map<std::string, VertexId> ids;

  auto intern = [&](const std::string& name, std::size_t line) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(file.names.size()));
    if (inserted) {
      if (file.names.size() >= *declared)
        throw InputError("more than " + std::to_string(*declared) + " distinct vertex names", line);
      file.names.push_back(name);
    }
    return it->second;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const auto& directive = tokens[0];
    if (!have_header) {
      if (directive != "graph" || tokens.size() != 2) throw InputError("expected 'graph <kind>' header", line);
      if (tokens[1] == "undirected")
        file.kind = GraphKind::undirected;
      else if (tokens[1] == "directed")
        file.kind = GraphKind::directed;
      else if (tokens[1] == "multigraph")
        file.kind = GraphKind::multigraph;
      else
        throw InputError("unknown graph kind '" + tokens[1] + "'", line);
      have_header = true;
      continue;
    }
    if (directive == "graph") throw InputError("duplicate 'graph' header", line);
    if (directive == "vertices") {
      if (declared) throw InputError("duplicate 'vertices' line", line);
      if (tokens.size() != 2) throw InputError("expected 'vertices <n>'", line);
      declared = parse_count(tokens[1], line);
      declared_line = line;
      continue;
    }
    if (!declared) throw InputError("'vertices <n>' must precede '" + directive + "'", line);
    if (directive == "terminals") {
      if (file.terminals) throw InputError("duplicate 'terminals' line", line);
      if (!file.edges.empty()) throw InputError("'terminals' must precede edges", line);
      if (tokens.size() != 3) throw InputError("expected 'terminals <s> <t>'", line);
      if (tokens[1] == tokens[2]) throw InputError("terminals must be distinct", line);
      const auto s = intern(tokens[1], line);
      const auto t = intern(tokens[2], line);
      file.terminals = std::pair{s, t};
      continue;
    }
    if (directive == "edge") {
      if (!file.terminals && !options.terminals_optional) throw InputError("'terminals' must precede edges", line);
      const bool weighted = file.kind == GraphKind::multigraph;
      if (tokens.size() != (weighted ? 4U : 3U))
        throw InputError(weighted ? "expected 'edge <u> <v> <weight>'" : "expected 'edge <u> <v>' (no weight)", line);
      GraphFile::EdgeLine e{intern(tokens[1], line), intern(tokens[2], line), 0.0, line};
      if (weighted) e.weight = parse_weight(tokens[3], line);
      file.edges.push_back(e);
      continue;
    }
    throw InputError("unknown directive '" + directive + "'", line);
  }
  if (!have_header) throw InputError("empty graph file", line == 0 ? 1 : line);
  if (!declared) throw InputError("missing 'vertices <n>' line", line);
  if (!file.terminals && !options.terminals_optional) throw InputError("missing 'terminals <s> <t>' line", line);
  if (file.names.size() != *declared)
    throw InputError("declared " + std::to_string(*declared) + " vertices but " + std::to_string(file.names.size()) +
                         " distinct names appear",
                     declared_line);
  return file;
}

GraphFile parse_graph_file(const std::string& path, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in, options);
}

StGraph to_st_graph(const GraphFile& file) {
  if (file.kind == GraphKind::multigraph) throw InputError("expected a simple graph, got a multigraph");
  if (!file.terminals) throw InputError("missing terminals");
  const auto n = file.names.size();
  const bool directed = file.kind == GraphKind::directed;
  std::vector<bool> seen(n * n, false);
  std::vector<Edge> edges;
  for (const auto& e : file.edges) {
    if (e.u == e.v) throw InputError("self loop at '" + file.names[e.u] + "'", e.line);
    if (seen[e.u * n + e.v]) throw InputError("parallel edge", e.line);
    seen[e.u * n + e.v] = true;
    if (!directed) seen[e.v * n + e.u] = true;
    edges.push_back({e.u, e.v});
  }
  return StGraph(n, directed ? Direction::directed : Direction::undirected, file.terminals->first,
                 file.terminals->second, edges);
}

WeightedMultigraph to_multigraph(const GraphFile& file) {
  if (file.kind != GraphKind::multigraph) throw InputError("expected a multigraph");
  if (!file.terminals) throw InputError("missing terminals");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < file.edges.size(); ++i) {
    const auto& e = file.edges[i];
    if (e.u == e.v) throw InputError("self loop at '" + file.names[e.u] + "'", e.line);
    if (!std::isfinite(e.weight)) throw InputError("weight must be finite", e.line);
    edges.push_back({e.u, e.v, e.weight, static_cast<EdgeId>(i)});
  }
  return WeightedMultigraph(file.names.size(), file.terminals->first, file.terminals->second, std::move(edges));
}

void write_graph(std::ostream& out, const StGraph& g, const std::vector<std::string>& names,
                 const std::vector<bool>& keep) {
  out << "graph " << kind_name(g.directed() ? GraphKind::directed : GraphKind::undirected) << '\n';
  out << "vertices " << std::count(keep.begin(), keep.end(), true) << '\n';
  out << "terminals " << names[g.source()] << ' ' << names[g.target()] << '\n';
  for (const auto& e : g.edges())
    if (keep[e.u] && keep[e.v]) out << "edge " << names[e.u] << ' ' << names[e.v] << '\n';
}

void write_graph(std::ostream& out, const WeightedMultigraph& g, const std::vector<std::string>& names,
                 const std::vector<bool>& keep) {
  out << "graph " << kind_name(GraphKind::multigraph) << '\n';
  out << "vertices " << std::count(keep.begin(), keep.end(), true) << '\n';
  out << "terminals " << names[g.source()] << ' ' << names[g.target()] << '\n';
  for (const auto& e : g.edges())
    if (keep[e.u] && keep[e.v])
      out << "edge " << names[e.u] << ' ' << names[e.v] << ' ' << format_weight(e.weight) << '\n';
}

}  // namespace trackpath
