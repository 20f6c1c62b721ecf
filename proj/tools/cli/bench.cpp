#include "cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mve/errors.hpp"
#include "mve/format.hpp"
#include "mve/kernel.hpp"

namespace mve::cli {

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> columns{
      "file",         "algorithm",      "answer",         "solution_size", "wall_ms",
      "nodes_explored", "n_before",     "m_before",       "n_after",       "m_after",
      "feedback_edges", "kernel_vertex_bound", "kernel_edge_bound"};
  return columns;
}

namespace {

std::string answer_text(const json& answer) {
  return answer.is_string() ? answer.get<std::string>() : answer.dump();
}

BenchRow run_one(const std::string& name, const Instance& inst, const KernelResult& kernel,
                 const KernelBound& bound, const std::string& algorithm,
                 const SolveOptions& base) {
  BenchRow row;
  row.file = name;
  row.algorithm = algorithm;
  row.n_before = inst.graph.vertex_count();
  row.m_before = inst.graph.edge_count();
  row.n_after = kernel.instance.graph.vertex_count();
  row.m_after = kernel.instance.graph.edge_count();
  row.feedback_edges = bound.feedback_edges;
  row.kernel_vertex_bound = bound.max_vertices;
  row.kernel_edge_bound = bound.max_edges;
  SolveOptions opt = base;
  opt.algorithm = algorithm;
  opt.omit_timing = false;
  try {
    const SolveOutput out = solve(inst, opt);
    row.answer = answer_text(out.result.at("answer"));
    if (!out.result.at("distance_after").is_null()) {
      row.solution_size = static_cast<std::int64_t>(out.result.at("solution_edges").size());
    }
    row.wall_ms = out.result.at("wall_ms").get<double>();
    row.nodes_explored = out.result.at("nodes_explored").get<std::int64_t>();
  } catch (const PreconditionError&) {
    row.answer = "n/a";
  } catch (const UsageError&) {
    row.answer = "n/a";
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options,
                                std::ostream& warnings) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw UsageError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Loaded {
    std::string name;
    Instance instance;
    KernelResult kernel;
    KernelBound bound;
  };
  std::vector<Loaded> loaded;
  for (const auto& path : files) {
    try {
      Instance inst = parse_instance(read_file(path));
      KernelResult kernel = kernelize(inst);
      KernelBound bound = kernel_bound(inst.graph);
      loaded.push_back({path.filename().string(), std::move(inst), std::move(kernel), bound});
    } catch (const std::exception& e) {
      warnings << "warning: skipping " << path.filename().string() << ": " << e.what() << '\n';
    }
  }

  const std::size_t per = options.algorithms.size();
  std::vector<BenchRow> rows(loaded.size() * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const Loaded& item = loaded[i / per];
      rows[i] = run_one(item.name, item.instance, item.kernel, item.bound,
                        options.algorithms[i % per], options.solve);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool omit_timing) {
  std::ostringstream out;
  const auto& cols = bench_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << r.file << ',' << r.algorithm << ',' << r.answer << ',' << r.solution_size << ',';
    if (!omit_timing) out << std::fixed << std::setprecision(3) << r.wall_ms;
    out << ',' << r.nodes_explored << ',' << r.n_before << ',' << r.m_before << ',' << r.n_after
        << ',' << r.m_after << ',' << r.feedback_edges << ',' << r.kernel_vertex_bound << ','
        << r.kernel_edge_bound << '\n';
  }
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(24) << "file" << std::setw(22) << "algorithm" << std::setw(10)
      << "answer" << std::right << std::setw(6) << "|S|" << std::setw(12) << "ms" << std::setw(12)
      << "nodes" << std::setw(14) << "kernel n/m" << '\n';
  for (const auto& r : rows) {
    std::ostringstream kernel;
    kernel << r.n_after << '/' << r.m_after;
    out << std::left << std::setw(24) << r.file << std::setw(22) << r.algorithm << std::setw(10)
        << r.answer << std::right << std::setw(6) << r.solution_size << std::setw(12) << std::fixed
        << std::setprecision(3) << r.wall_ms << std::setw(12) << r.nodes_explored << std::setw(14)
        << kernel.str() << '\n';
  }
  return out.str();
}

}  // namespace mve::cli
