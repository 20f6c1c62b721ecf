#include "mve/approx.hpp"

#include <cmath>

#include "mve/errors.hpp"
#include "mve/exact.hpp"
#include "mve/paths.hpp"

namespace mve {

GreedyResult greedy_ell_approx(const Graph& g, Vertex s, Vertex t, Length ell) {
  if (ell < 1) throw InputError("ell must be positive");
  EdgeMask mask = g.empty_mask();
  std::vector<EdgeId> removed;
  GreedyResult out;
  while (true) {
    const auto path = shortest_path(g, s, t, &mask);
    if (!path || path->length >= ell) break;
    for (EdgeId e : path->edges) {
      mask[e] = 1;
      removed.push_back(e);
    }
    ++out.lower_bound;
  }
  out.solution = make_solution(g, s, t, std::move(removed));
  return out;
}

Length param_approx_threshold(Vertex n, double c) {
  if (c <= 0) throw InputError("c must be positive");
  if (n < 2) return 1;
  const double exponent = c * std::sqrt(std::log2(static_cast<double>(n)));
  return static_cast<Length>(std::ceil(std::exp2(exponent)));
}

ParamApproxResult param_approx_max_length(const Instance& inst, double c,
                                          SolveContext* ctx) {
  if (!inst.unit_length()) {
    throw PreconditionError("param_approx_max_length requires unit edge lengths");
  }
  ParamApproxResult out;
  out.threshold = param_approx_threshold(inst.graph.vertex_count(), c);
  out.solution = make_solution(inst, {});
  for (Length ell = 1; ell <= out.threshold; ++ell) {
    auto sol = search_tree(inst.with_target(ell), ctx);
    if (!sol) {
      out.certificate = {ApproxCertificate::Kind::kOptimal, 1.0};
      return out;
    }
    out.solution = std::move(*sol);
  }
  out.certificate = {ApproxCertificate::Kind::kApproxFactor,
                     static_cast<double>(inst.graph.vertex_count()) /
                         static_cast<double>(out.threshold)};
  return out;
}

}  // namespace mve
