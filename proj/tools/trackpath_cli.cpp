// trackpath: command-line driver for the tracking set library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trackpath/chordal_tracker.hpp"
#include "trackpath/degree_bounded.hpp"
#include "trackpath/edge_tracker.hpp"
#include "trackpath/errors.hpp"
#include "trackpath/graph.hpp"
#include "trackpath/graph_io.hpp"
#include "trackpath/hardness.hpp"
#include "trackpath/oracle.hpp"
#include "trackpath/preprocess.hpp"
#include "trackpath/reconstruct.hpp"
#include "trackpath/tournament_tracker.hpp"

namespace {

using namespace trackpath;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInvalid = 1, kInputError = 2, kResource = 3 };

struct Options {
  bool json = false;
  std::string file;
  std::string algorithm;
  std::string set;
  std::string pi;
  bool edges = false;
  bool condition = false;
  std::size_t max_vertices = 12;
  std::string out;
  std::string meta;
};

// Class mismatch errors carry vertex ids; the driver prints them by name.
struct Context {
  const Options& opt;
  std::vector<std::string> names;
  std::string command;
};

std::size_t path_cap() {
  const char* raw = std::getenv("TRACKPATH_PATH_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultPathCap;
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw InputError(std::string("TRACKPATH_PATH_CAP must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_names(const std::vector<VertexId>& ids, const std::vector<std::string>& names) {
  std::string out;
  for (auto v : ids) {
    if (!out.empty()) out += ' ';
    out += names[v];
  }
  return out;
}

Json name_array(const std::vector<VertexId>& ids, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (auto v : ids) arr.push_back(names[v]);
  return arr;
}

Json path_json(const Path& p, const std::vector<std::string>& names, bool with_edges) {
  if (!with_edges) return name_array(p.vertices, names);
  return Json{{"vertices", name_array(p.vertices, names)}, {"edges", p.edges}};
}

std::string path_text(const Path& p, const std::vector<std::string>& names, bool with_edges) {
  std::string out = join_names(p.vertices, names);
  if (with_edges) {
    out += " |";
    for (auto id : p.edges) out += ' ' + std::to_string(id);
  }
  return out;
}

void emit(const Context& ctx, Json result, Json witness = nullptr) {
  Json doc;
  doc["command"] = ctx.command;
  doc["input"] = ctx.opt.file;
  doc["result"] = std::move(result);
  doc["witness"] = std::move(witness);
  std::cout << doc.dump(2) << '\n';
}

TrackingSet parse_vertex_set(const GraphFile& file, const std::string& text) {
  std::vector<VertexId> ids;
  for (const auto& name : split_list(text)) ids.push_back(file.id_of(name));
  return TrackingSet(std::move(ids));
}

int cmd_paths(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  const bool multi = file.kind == GraphKind::multigraph;
  const auto paths = multi ? enumerate_st_paths(to_multigraph(file), path_cap())
                           : enumerate_st_paths(to_st_graph(file), path_cap());
  if (ctx.opt.json) {
    Json arr = Json::array();
    for (const auto& p : paths) arr.push_back(path_json(p, file.names, multi));
    emit(ctx, Json{{"count", paths.size()}, {"paths", std::move(arr)}});
  } else {
    for (const auto& p : paths) std::cout << path_text(p, file.names, multi) << '\n';
  }
  return kOk;
}

int cmd_reduce(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  std::vector<bool> keep(file.names.size(), true);
  std::ostringstream text;
  Json result;
  if (file.kind == GraphKind::multigraph) {
    const auto reduced = reduce(to_multigraph(file));
    for (auto v : reduced.removed_vertices) keep[v] = false;
    write_graph(text, reduced.graph, file.names, keep);
    result = Json{{"st_connected", reduced.st_connected},
                  {"removed_vertices", name_array(reduced.removed_vertices, file.names)},
                  {"removed_edges", reduced.removed_edges}};
  } else {
    const auto reduced = reduce(to_st_graph(file));
    for (auto v : reduced.removed_vertices) keep[v] = false;
    write_graph(text, reduced.graph, file.names, keep);
    Json removed = Json::array();
    for (const auto& e : reduced.removed_edges) removed.push_back({file.names[e.u], file.names[e.v]});
    result = Json{{"st_connected", reduced.st_connected},
                  {"removed_vertices", name_array(reduced.removed_vertices, file.names)},
                  {"removed_edges", std::move(removed)}};
  }
  if (ctx.opt.json) {
    result["graph"] = text.str();
    emit(ctx, std::move(result));
  } else {
    std::cout << text.str();
  }
  return kOk;
}

int cmd_track(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  const auto g = to_st_graph(file);
  TrackingSet trackers;
  if (ctx.opt.algorithm == "chordal")
    trackers = track_chordal(g);
  else if (ctx.opt.algorithm == "tournament")
    trackers = track_tournament(g);
  else
    trackers = track_bounded_degree(g);
  if (ctx.opt.json) {
    Json result{{"algorithm", ctx.opt.algorithm},
                {"size", trackers.size()},
                {"trackers", name_array(trackers.members(), file.names)}};
    if (ctx.opt.algorithm == "approx") result["max_degree"] = max_degree(g);
    emit(ctx, std::move(result));
  } else {
    std::cout << join_names(trackers.members(), file.names) << '\n';
  }
  return kOk;
}

int cmd_track_edges(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  const auto g = to_multigraph(file);
  const auto tracked = track_edges(g);
  if (ctx.opt.json) {
    Json edges = Json::array();
    for (auto id : tracked.members) {
      const auto& e = *g.find(id);
      edges.push_back(Json{{"id", id}, {"u", file.names[e.u]}, {"v", file.names[e.v]}, {"weight", e.weight}});
    }
    emit(ctx, Json{{"size", tracked.members.size()}, {"total_weight", tracked.total_weight}, {"edges", std::move(edges)}});
  } else {
    std::string line;
    for (auto id : tracked.members) line += (line.empty() ? "" : " ") + std::to_string(id);
    std::cout << line << '\n';
    std::ostringstream w;
    w << tracked.total_weight;
    std::cout << "weight " << w.str() << '\n';
  }
  return kOk;
}

void print_report(const Context& ctx, const VerificationReport& report, bool with_edges) {
  const auto& names = ctx.names;
  if (ctx.opt.json) {
    Json witness = nullptr;
    if (report.witness) {
      witness = Json::object();
      witness["paths"] = Json::array({path_json(report.witness->first, names, with_edges),
                                      path_json(report.witness->second, names, with_edges)});
      if (const auto& c = report.condition_witness) {
        witness["u"] = names[c->u];
        witness["v"] = names[c->v];
        witness["first"] = name_array(c->first.vertices, names);
        witness["second"] = name_array(c->second.vertices, names);
        witness["source_leg"] = name_array(c->source_leg.vertices, names);
        witness["target_leg"] = name_array(c->target_leg.vertices, names);
      }
    }
    emit(ctx, Json{{"valid", report.valid}}, std::move(witness));
    return;
  }
  std::cout << (report.valid ? "VALID" : "INVALID") << '\n';
  if (!report.witness) return;
  std::cout << "path " << path_text(report.witness->first, names, with_edges) << '\n';
  std::cout << "path " << path_text(report.witness->second, names, with_edges) << '\n';
  if (const auto& c = report.condition_witness) {
    std::cout << "u " << names[c->u] << '\n' << "v " << names[c->v] << '\n';
    std::cout << "first " << join_names(c->first.vertices, names) << '\n';
    std::cout << "second " << join_names(c->second.vertices, names) << '\n';
    std::cout << "source-leg " << join_names(c->source_leg.vertices, names) << '\n';
    std::cout << "target-leg " << join_names(c->target_leg.vertices, names) << '\n';
  }
}

int cmd_verify(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  VerificationReport report;
  if (ctx.opt.edges) {
    if (ctx.opt.condition) throw PreconditionError("--condition applies to vertex tracking sets only");
    const auto g = to_multigraph(file);
    TrackingEdgeSet set;
    for (const auto& tok : split_list(ctx.opt.set)) {
      EdgeId id = 0;
      try {
        std::size_t used = 0;
        id = static_cast<EdgeId>(std::stoul(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("edge set entries must be edge ids, got '" + tok + "'");
      }
      if (!g.find(id)) throw InputError("unknown edge id " + tok);
      set.members.push_back(id);
    }
    report = is_tracking_edge_set(g, set, path_cap());
  } else {
    const auto g = to_st_graph(file);
    const auto set = parse_vertex_set(file, ctx.opt.set);
    report = ctx.opt.condition ? condition_witness(g, set, path_cap()) : is_tracking_set(g, set, path_cap());
  }
  print_report(ctx, report, ctx.opt.edges);
  return report.valid ? kOk : kInvalid;
}

int cmd_min_track(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  const auto g = to_st_graph(file);
  const auto best = min_tracking_set(g, OracleLimits{path_cap(), ctx.opt.max_vertices});
  if (ctx.opt.json)
    emit(ctx, Json{{"size", best.size()}, {"trackers", name_array(best.members(), file.names)}});
  else
    std::cout << join_names(best.members(), file.names) << '\n';
  return kOk;
}

int cmd_reconstruct(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file);
  ctx.names = file.names;
  const auto g = to_st_graph(file);
  const auto set = parse_vertex_set(file, ctx.opt.set);
  TrackerSequence pi;
  for (const auto& name : split_list(ctx.opt.pi)) pi.seq.push_back(file.id_of(name));
  const auto path = reconstruct_path(g, set, pi);
  if (ctx.opt.json) {
    emit(ctx, Json{{"found", path.has_value()}, {"path", path ? name_array(path->vertices, file.names) : Json(nullptr)}});
  } else {
    std::cout << (path ? join_names(path->vertices, file.names) : std::string("NONE")) << '\n';
  }
  return path ? kOk : kInvalid;
}

int cmd_gen_vc(Context& ctx) {
  auto file = parse_graph_file(ctx.opt.file, ParseOptions{.terminals_optional = true});
  ctx.names = file.names;
  if (file.kind != GraphKind::undirected) throw InputError("vertex cover source must be an undirected graph");
  VcSource source{file.names.size(), {}};
  std::vector<bool> seen(source.vertex_count * source.vertex_count, false);
  for (const auto& e : file.edges) {
    if (e.u == e.v) throw InputError("self loop at '" + file.names[e.u] + "'", e.line);
    if (seen[e.u * source.vertex_count + e.v]) throw InputError("parallel edge", e.line);
    seen[e.u * source.vertex_count + e.v] = seen[e.v * source.vertex_count + e.u] = true;
    source.edges.push_back({e.u, e.v});
  }
  const auto inst = vc_to_tracking_instance(source);
  ctx.names = inst.names;

  // Isolated source vertices stay isolated in G' and cannot be written in the
  // edge-list format; they never matter for a cover.
  std::vector<bool> keep(inst.graph.vertex_count());
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    keep[v] = inst.graph.degree(v) > 0 || v == inst.graph.source() || v == inst.graph.target();
  std::ostringstream text;
  write_graph(text, inst.graph, inst.names, keep);

  Json meta;
  meta["v_map"] = Json::object();
  for (std::size_t a = 0; a < inst.v_map.size(); ++a)
    if (keep[inst.v_map[a]]) meta["v_map"][file.names[a]] = inst.names[inst.v_map[a]];
  meta["e_map"] = Json::array();
  for (std::size_t i = 0; i < inst.e_map.size(); ++i) {
    const auto& e = source.edges[i];
    meta["e_map"].push_back(Json{{"edge", {file.names[e.u], file.names[e.v]}},
                                 {"v", inst.names[inst.e_map[i].first]},
                                 {"v_prime", inst.names[inst.e_map[i].second]}});
  }
  meta["grid_vertices"] = name_array(inst.grid_vertices, inst.names);
  meta["forced_count"] = inst.forced_count;
  meta["closed_form_count"] = inst.closed_form_count();
  meta["max_degree"] = max_degree(inst.graph);

  if (!ctx.opt.out.empty()) {
    std::ofstream out(ctx.opt.out);
    if (!out) throw InputError("cannot write '" + ctx.opt.out + "'");
    out << text.str();
  }
  if (!ctx.opt.meta.empty()) {
    std::ofstream out(ctx.opt.meta);
    if (!out) throw InputError("cannot write '" + ctx.opt.meta + "'");
    out << meta.dump(2) << '\n';
  }
  if (ctx.opt.json) {
    Json result = meta;
    result["graph"] = text.str();
    emit(ctx, std::move(result));
  } else if (ctx.opt.out.empty()) {
    std::cout << text.str();
  }
  return kOk;
}

int report_error(const Context& ctx, const std::string& kind, const std::string& message,
                 const std::vector<VertexId>& witness, int code) {
  std::vector<std::string> named;
  for (auto v : witness) named.push_back(v < ctx.names.size() ? ctx.names[v] : std::to_string(v));
  if (ctx.opt.json) {
    Json doc;
    doc["command"] = ctx.command;
    doc["input"] = ctx.opt.file;
    doc["result"] = Json{{"error", kind}, {"message", message}, {"exit_code", code}};
    doc["witness"] = named.empty() ? Json(nullptr) : Json(named);
    std::cout << doc.dump(2) << '\n';
  }
  std::cerr << "error: " << (ctx.opt.file.empty() ? "" : ctx.opt.file + ": ") << message << '\n';
  if (!named.empty()) {
    std::cerr << "witness:";
    for (const auto& n : named) std::cerr << ' ' << n;
    std::cerr << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Tracking sets for s-t paths"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit JSON output");

  auto* paths = app.add_subcommand("paths", "Enumerate all s-t paths");
  auto* reduce_cmd = app.add_subcommand("reduce", "Delete vertices and edges on no s-t path");
  auto* track = app.add_subcommand("track", "Compute a tracking set");
  auto* track_edges_cmd = app.add_subcommand("track-edges", "Minimum-weight tracking edge set of a multigraph");
  auto* verify = app.add_subcommand("verify", "Check a tracking set by brute force");
  auto* min_track = app.add_subcommand("min-track", "Minimum tracking set by exhaustive search");
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the s-t path behind a tracker sequence");
  auto* gen_vc = app.add_subcommand("gen-vc-instance", "Build the tracking instance of a vertex cover source");

  for (auto* sub : {paths, reduce_cmd, track_edges_cmd, verify, min_track, reconstruct, gen_vc})
    sub->add_flag("--json", opt.json, "Emit JSON output");
  track->add_flag("--json", opt.json, "Emit JSON output");

  track->add_option("algorithm", opt.algorithm, "chordal, tournament or approx")
      ->required()
      ->check(CLI::IsMember({"chordal", "tournament", "approx"}));
  for (auto* sub : {paths, reduce_cmd, track, track_edges_cmd, verify, min_track, reconstruct, gen_vc})
    sub->add_option("file", opt.file, "Graph file")->required();

  verify->add_option("--set", opt.set, "Comma-separated trackers (edge ids with --edges)")->required();
  verify->add_flag("--edges", opt.edges, "Verify a tracking edge set of a multigraph");
  verify->add_flag("--condition", opt.condition, "Search for a tracking set condition violation");
  min_track->add_option("--max-vertices", opt.max_vertices, "Refuse larger graphs")->capture_default_str();
  reconstruct->add_option("--set", opt.set, "Comma-separated trackers")->required();
  reconstruct->add_option("--pi", opt.pi, "Comma-separated tracker sequence")->required();
  gen_vc->add_option("--out", opt.out, "Write the instance here instead of stdout");
  gen_vc->add_option("--meta", opt.meta, "Write the JSON metadata here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx{opt, {}, app.get_subcommands().front()->get_name()};
  if (ctx.command == "track") ctx.command = "track " + opt.algorithm;
  try {
    if (*paths) return cmd_paths(ctx);
    if (*reduce_cmd) return cmd_reduce(ctx);
    if (*track) return cmd_track(ctx);
    if (*track_edges_cmd) return cmd_track_edges(ctx);
    if (*verify) return cmd_verify(ctx);
    if (*min_track) return cmd_min_track(ctx);
    if (*reconstruct) return cmd_reconstruct(ctx);
    if (*gen_vc) return cmd_gen_vc(ctx);
  } catch (const ClassMismatchError& e) {
    return report_error(ctx, "class", e.what(), e.witness(), kInputError);
  } catch (const InputError& e) {
    return report_error(ctx, "input", e.what(), {}, kInputError);
  } catch (const PreconditionError& e) {
    return report_error(ctx, "precondition", e.what(), {}, kInputError);
  } catch (const ResourceError& e) {
    return report_error(ctx, "resource", e.what(), {}, kResource);
  } catch (const Error& e) {
    return report_error(ctx, "error", e.what(), {}, kInputError);
  }
  return kInputError;
}
