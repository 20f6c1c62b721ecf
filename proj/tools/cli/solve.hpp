#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cli/io.hpp"
#include "mve/instance.hpp"
#include "mve/kernel.hpp"

namespace mve::cli {

enum class Variant { kDecision, kMinCost, kMaxLength };

std::optional<Variant> parse_variant(const std::string& name);
std::string to_string(Variant v);

struct SolveOptions {
  std::string algorithm = "auto";
  Variant variant = Variant::kDecision;
  std::optional<std::int64_t> k;
  std::optional<Length> ell;
  /// Unset means the algorithm's default: on for auto, off otherwise.
  std::optional<bool> kernelize;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> timeout_ms;
  double c = 1.0;  // paramapprox exponent constant
  bool omit_timing = false;
};

struct SolveOutput {
  json result;
  /// Present when the instance was kernelized.
  std::optional<KernelTrace> trace;
  bool timed_out = false;
};

/// Algorithm names accepted by --alg.
const std::vector<std::string>& algorithm_names();

/// Runs one solver and builds the versioned result object. Throws
/// UsageError for contradictory flags and PreconditionError when the
/// algorithm does not apply to the instance.
SolveOutput solve(const Instance& input, const SolveOptions& options);

}  // namespace mve::cli
