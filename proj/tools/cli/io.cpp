#include "cli/io.hpp"

#include <fstream>
#include <sstream>

#include "mve/format.hpp"

namespace mve::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

json distance_to_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

Distance distance_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Distance::infinite();
  if (j.is_number_integer()) return Distance(j.get<std::int64_t>());
  throw InputError("distance must be an integer or \"inf\"");
}

json edges_to_json(const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(e + 1);
  return out;
}

namespace {

json ids_plus_one(const std::vector<std::int32_t>& ids) {
  json out = json::array();
  for (auto v : ids) out.push_back(v + 1);
  return out;
}

std::vector<std::int32_t> ids_minus_one(const json& j) {
  std::vector<std::int32_t> out;
  for (const auto& v : j) out.push_back(v.get<std::int32_t>() - 1);
  return out;
}

}  // namespace

json trace_to_json(const KernelTrace& trace) {
  json events = json::array();
  for (const auto& ev : trace.events) {
    if (const auto* d1 = std::get_if<DeleteDegreeOne>(&ev)) {
      events.push_back({{"type", "delete_degree_one"}, {"vertex", d1->vertex + 1}});
    } else if (const auto* d2 = std::get_if<ContractDegreeTwo>(&ev)) {
      events.push_back({{"type", "contract_degree_two"},
                        {"vertex", d2->vertex + 1},
                        {"u", d2->u + 1},
                        {"w", d2->w + 1},
                        {"length", d2->length},
                        {"constituents", ids_plus_one(d2->constituents)}});
    } else {
      events.push_back({{"type", "discard_component"},
                        {"vertices", ids_plus_one(std::get<DiscardComponent>(ev).vertices)}});
    }
  }
  json edge_origin = json::array();
  for (const auto& parts : trace.edge_origin) edge_origin.push_back(ids_plus_one(parts));
  return {{"schema", 1},
          {"events", std::move(events)},
          {"vertex_origin", ids_plus_one(trace.vertex_origin)},
          {"edge_origin", std::move(edge_origin)}};
}

KernelTrace trace_from_json(const json& j) {
  try {
    KernelTrace trace;
    for (const auto& ev : j.at("events")) {
      const auto type = ev.at("type").get<std::string>();
      if (type == "delete_degree_one") {
        trace.events.emplace_back(DeleteDegreeOne{ev.at("vertex").get<Vertex>() - 1});
      } else if (type == "contract_degree_two") {
        ContractDegreeTwo c;
        c.vertex = ev.at("vertex").get<Vertex>() - 1;
        c.u = ev.at("u").get<Vertex>() - 1;
        c.w = ev.at("w").get<Vertex>() - 1;
        c.length = ev.at("length").get<Length>();
        c.constituents = ids_minus_one(ev.at("constituents"));
        trace.events.emplace_back(std::move(c));
      } else if (type == "discard_component") {
        trace.events.emplace_back(DiscardComponent{ids_minus_one(ev.at("vertices"))});
      } else {
        throw InputError("unknown trace event '" + type + "'");
      }
    }
    trace.vertex_origin = ids_minus_one(j.at("vertex_origin"));
    for (const auto& parts : j.at("edge_origin")) trace.edge_origin.push_back(ids_minus_one(parts));
    return trace;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed trace: ") + e.what());
  }
}

TripartiteGraph parse_tripartite(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> graph;
  std::vector<std::int32_t> part;
  std::int64_t declared = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError(ParseCode::kSyntax, line_no, msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    if (tag == "p") {
      std::string kind;
      std::int64_t n = 0;
      if (graph || !(fields >> kind >> n >> declared) || kind != "tri" || n < 0) {
        fail("expected a single 'p tri <n> <m>' header");
      }
      graph.emplace(static_cast<Vertex>(n));
      part.assign(static_cast<std::size_t>(n), -1);
      continue;
    }
    if (!graph) throw ParseError(ParseCode::kMissingHeader, line_no, "header must come first");
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!(fields >> a >> b)) fail("expected two integers");
    if (a < 1 || a > graph->vertex_count()) {
      throw ParseError(ParseCode::kVertexOutOfRange, line_no, "");
    }
    if (tag == "v") {
      if (b < 1 || b > 3) fail("part must be 1, 2 or 3");
      part[a - 1] = static_cast<std::int32_t>(b - 1);
    } else if (tag == "e") {
      if (b < 1 || b > graph->vertex_count()) {
        throw ParseError(ParseCode::kVertexOutOfRange, line_no, "");
      }
      if (a == b) throw ParseError(ParseCode::kSelfLoop, line_no, "");
      if (graph->adjacent(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1))) {
        throw ParseError(ParseCode::kDuplicateEdge, line_no, "");
      }
      graph->add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1), 1);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!graph) throw ParseError(ParseCode::kMissingHeader, 0, "no 'p tri' line");
  if (graph->edge_count() != declared) throw ParseError(ParseCode::kEdgeCountMismatch, 0, "");
  TripartiteGraph out;
  for (std::size_t v = 0; v < part.size(); ++v) {
    if (part[v] < 0) throw ParseError(ParseCode::kSyntax, 0, "vertex " + std::to_string(v + 1) + " has no part");
    out.part.push_back(static_cast<std::uint8_t>(part[v]));
  }
  out.graph = std::move(*graph);
  return out;
}

std::string emit_tripartite(const TripartiteGraph& g) {
  std::ostringstream out;
  out << "p tri " << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
  for (std::size_t v = 0; v < g.part.size(); ++v) {
    out << "v " << v + 1 << ' ' << static_cast<int>(g.part[v]) + 1 << '\n';
  }
  for (const Edge& e : g.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace mve::cli
