#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mve/generators.hpp"
#include "mve/instance.hpp"
#include "mve/kernel.hpp"

namespace mve::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kParse = 3 };

/// Bad or contradictory command-line flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

json distance_to_json(Distance d);
/// Accepts an integer or the string "inf".
Distance distance_from_json(const json& j);

/// 1-based edge ids.
json edges_to_json(const std::vector<EdgeId>& edges);

json trace_to_json(const KernelTrace& trace);
KernelTrace trace_from_json(const json& j);

/// Tripartite text format: "p tri <n> <m>", "v <id> <part 1..3>" for
/// every vertex, "e <u> <v>"; 1-based ids, '#' comments.
TripartiteGraph parse_tripartite(const std::string& text);
std::string emit_tripartite(const TripartiteGraph& g);

}  // namespace mve::cli
