#include "mve/format.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace mve {

std::string_view to_string(ParseCode code) {
  switch (code) {
    case ParseCode::kSyntax: return "Syntax";
    case ParseCode::kMissingHeader: return "MissingHeader";
    case ParseCode::kDuplicateHeader: return "DuplicateHeader";
    case ParseCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ParseCode::kSelfLoop: return "SelfLoop";
    case ParseCode::kDuplicateEdge: return "DuplicateEdge";
    case ParseCode::kNonPositiveLength: return "NonPositiveLength";
    case ParseCode::kEdgeCountMismatch: return "EdgeCountMismatch";
    case ParseCode::kMissingTerminal: return "MissingTerminal";
    case ParseCode::kSameTerminals: return "SameTerminals";
    case ParseCode::kBadParameter: return "BadParameter";
  }
  return "Unknown";
}

namespace {

std::string describe(ParseCode code, std::size_t line, const std::string& detail) {
  std::string out(to_string(code));
  if (line > 0) out += " at line " + std::to_string(line);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw ParseError(ParseCode::kSyntax, line, "expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(ParseCode code, std::size_t line, const std::string& detail)
    : InputError(describe(code, line, detail)), code_(code), line_(line) {}

Instance parse_instance(std::string_view text) {
  std::optional<Graph> graph;
  std::int64_t declared_edges = 0;
  std::optional<Vertex> s;
  std::optional<Vertex> t;
  std::int64_t k = 0;
  Length ell = 1;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto f = split_fields(line);
    if (f.empty() || f[0].front() == '#') continue;

    const std::string_view tag = f[0];
    auto expect = [&](std::size_t count) {
      if (f.size() != count) {
        throw ParseError(ParseCode::kSyntax, line_no,
                         "'" + std::string(tag) + "' takes " + std::to_string(count - 1) + " fields");
      }
    };
    auto vertex = [&](std::string_view field) {
      const std::int64_t id = to_int(field, line_no);
      if (id < 1 || id > graph->vertex_count()) {
        throw ParseError(ParseCode::kVertexOutOfRange, line_no, "vertex " + std::string(field));
      }
      return static_cast<Vertex>(id - 1);
    };

    if (tag == "p") {
      if (graph) throw ParseError(ParseCode::kDuplicateHeader, line_no, "");
      expect(4);
      if (f[1] != "mve") throw ParseError(ParseCode::kSyntax, line_no, "expected 'p mve <n> <m>'");
      const std::int64_t n = to_int(f[2], line_no);
      declared_edges = to_int(f[3], line_no);
      if (n < 0 || n > INT32_MAX || declared_edges < 0) {
        throw ParseError(ParseCode::kSyntax, line_no, "negative or oversized count");
      }
      graph.emplace(static_cast<Vertex>(n));
      continue;
    }
    if (!graph) throw ParseError(ParseCode::kMissingHeader, line_no, "header must come first");

    if (tag == "s" || tag == "t") {
      expect(2);
      auto& slot = tag == "s" ? s : t;
      if (slot) throw ParseError(ParseCode::kDuplicateHeader, line_no, "terminal given twice");
      slot = vertex(f[1]);
      if (s && t && *s == *t) throw ParseError(ParseCode::kSameTerminals, line_no, "");
    } else if (tag == "k") {
      expect(2);
      k = to_int(f[1], line_no);
      if (k < 0) throw ParseError(ParseCode::kBadParameter, line_no, "k must be non-negative");
    } else if (tag == "l") {
      expect(2);
      ell = to_int(f[1], line_no);
      if (ell < 1) throw ParseError(ParseCode::kBadParameter, line_no, "l must be positive");
    } else if (tag == "e") {
      expect(4);
      const Vertex u = vertex(f[1]);
      const Vertex v = vertex(f[2]);
      const Length len = to_int(f[3], line_no);
      if (u == v) throw ParseError(ParseCode::kSelfLoop, line_no, "");
      if (len < 1) throw ParseError(ParseCode::kNonPositiveLength, line_no, "");
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
        throw ParseError(ParseCode::kDuplicateEdge, line_no, "");
      }
      graph->add_edge(u, v, len);
    } else {
      throw ParseError(ParseCode::kSyntax, line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }

  if (!graph) throw ParseError(ParseCode::kMissingHeader, 0, "no 'p mve' line");
  if (graph->edge_count() != declared_edges) {
    throw ParseError(ParseCode::kEdgeCountMismatch, 0,
                     "header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(graph->edge_count()));
  }
  if (!s || !t) throw ParseError(ParseCode::kMissingTerminal, 0, "both s and t are required");
  return Instance(std::move(*graph), *s, *t, k, ell);
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p mve " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  out << "s " << inst.s + 1 << '\n';
  out << "t " << inst.t + 1 << '\n';
  out << "k " << inst.k << '\n';
  out << "l " << inst.ell << '\n';
  for (const Edge& e : inst.graph.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.length << '\n';
  }
  return out.str();
}

}  // namespace mve
