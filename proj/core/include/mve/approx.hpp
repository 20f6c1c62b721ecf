#pragma once

#include <cstdint>

#include "mve/context.hpp"
#include "mve/instance.hpp"

namespace mve {

struct GreedyResult {
  Solution solution;
  /// Number of rounds; each removed path is edge-disjoint from the others,
  /// so this lower-bounds the optimum.
  std::int64_t lower_bound = 0;
};

/// Deletes every edge of a shortest s-t path while that path is shorter
/// than ell. |S| <= rounds * ell <= ell * OPT.
GreedyResult greedy_ell_approx(const Graph& g, Vertex s, Vertex t, Length ell);

struct ApproxCertificate {
  enum class Kind { kOptimal, kApproxFactor };
  Kind kind = Kind::kOptimal;
  double factor = 1.0;  // n / g(n) for kApproxFactor
};

struct ParamApproxResult {
  Solution solution;
  ApproxCertificate certificate;
  Length threshold = 0;  // g(n)
};

/// g(n) = ceil(2^(c * sqrt(log2 n))).
Length param_approx_threshold(Vertex n, double c);

/// Max-Length for unit lengths: runs the search tree for ell = 1..g(n).
/// A "no" at ell certifies the solution found for ell - 1 as optimal;
/// otherwise the solution for g(n) is within a factor n / g(n).
ParamApproxResult param_approx_max_length(const Instance& inst, double c,
                                          SolveContext* ctx = nullptr);

}  // namespace mve
