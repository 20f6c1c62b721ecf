#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "cli/solve.hpp"

namespace mve::cli {

struct BenchOptions {
  std::vector<std::string> algorithms{"auto"};
  SolveOptions solve;  // algorithm field is overridden per row
  unsigned jobs = 1;
};

struct BenchRow {
  std::string file;
  std::string algorithm;
  std::string answer;
  std::int64_t solution_size = -1;  // -1 when no solution
  double wall_ms = 0;
  std::int64_t nodes_explored = 0;
  std::int64_t n_before = 0;
  std::int64_t m_before = 0;
  std::int64_t n_after = 0;
  std::int64_t m_after = 0;
  std::int64_t feedback_edges = 0;
  std::int64_t kernel_vertex_bound = 0;
  std::int64_t kernel_edge_bound = 0;
};

/// Fixed CSV columns, in order.
const std::vector<std::string>& bench_columns();

/// Runs every algorithm on every regular file of `dir` (sorted by name).
/// Unreadable or malformed files are skipped with a line on `warnings`.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options,
                                std::ostream& warnings);

std::string bench_csv(const std::vector<BenchRow>& rows, bool omit_timing);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace mve::cli
