#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "mve/approx.hpp"
#include "mve/generators.hpp"
#include "mve/poly.hpp"
#include "mve/sp_tree.hpp"
#include "oracles.hpp"

using namespace mve;

TEST(Greedy, Examples) {
  const Graph edge = fx::unit_graph(2, {{0, 1}});
  const auto one = greedy_ell_approx(edge, 0, 1, 2);
  EXPECT_EQ(one.solution.deleted_edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(one.lower_bound, 1);

  const auto d = greedy_ell_approx(fx::diamond(), 0, 3, 3);
  EXPECT_EQ(d.lower_bound, 2);
  EXPECT_EQ(d.solution.cardinality(), 4);

  const auto none = greedy_ell_approx(fx::path(4), 0, 3, 3);
  EXPECT_EQ(none.lower_bound, 0);
  EXPECT_TRUE(none.solution.deleted_edges.empty());
}

TEST(Greedy, RatioAndLowerBoundAgainstOracle) {
  const RandomFamily families[] = {RandomFamily::kErdosRenyi, RandomFamily::kTreePlusF,
                                   RandomFamily::kClusterPlusX, RandomFamily::kSeriesParallel};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomParams p;
    p.n = 4 + static_cast<Vertex>(seed % 4);
    p.m = 2 + static_cast<EdgeId>(seed % 10);
    p.f = static_cast<std::int32_t>(seed % 4);
    p.max_length = 1 + static_cast<Length>(seed % 2);
    const Instance inst = gen_random(families[seed % 4], p, seed);
    if (inst.graph.edge_count() > 14) continue;
    const oracle::SubsetTable table(inst.graph, inst.s, inst.t);
    for (Length ell = 1; ell <= 8; ++ell) {
      const auto r = greedy_ell_approx(inst.graph, inst.s, inst.t, ell);
      ASSERT_TRUE(r.solution.achieved_distance >= ell);
      const auto opt = table.min_cost(ell);
      ASSERT_LE(r.lower_bound, opt);
      ASSERT_LE(r.solution.cardinality(), ell * opt);
    }
  }
}

TEST(ParamApprox, Threshold) {
  EXPECT_EQ(param_approx_threshold(2, 1.0), 2);
  EXPECT_EQ(param_approx_threshold(16, 1.0), 4);
  EXPECT_EQ(param_approx_threshold(16, 0.5), 2);
  EXPECT_EQ(param_approx_threshold(1000, 1.0),
            static_cast<Length>(std::ceil(std::pow(2.0, std::sqrt(std::log2(1000.0))))));
}

TEST(ParamApprox, Examples) {
  const auto path = param_approx_max_length(Instance(fx::path(4), 0, 3, 0, 1), 2.0);
  EXPECT_EQ(path.certificate.kind, ApproxCertificate::Kind::kOptimal);
  EXPECT_EQ(path.solution.achieved_distance, Distance(3));

  const auto d = param_approx_max_length(Instance(fx::diamond(), 0, 3, 1, 1), 1.0);
  EXPECT_EQ(d.certificate.kind, ApproxCertificate::Kind::kOptimal);
  EXPECT_EQ(d.solution.achieved_distance, Distance(2));
}

TEST(ParamApprox, LongCycleFallsBackToFactor) {
  // Cycle on 40 vertices with s, t at distance 1: one deletion leaves 39.
  const Graph g = fx::cycle(40);
  const Instance inst(g, 0, 1, 1, 1);
  const auto r = param_approx_max_length(inst, 1.0);
  EXPECT_EQ(r.certificate.kind, ApproxCertificate::Kind::kApproxFactor);
  EXPECT_TRUE(r.solution.achieved_distance >= r.threshold);
  const auto exact = sp_max_length(*build_sp_tree(g, 0, 1), g, 1).distance;
  EXPECT_EQ(exact, Distance(39));
  EXPECT_LE(static_cast<double>(exact.value()) / static_cast<double>(r.solution.achieved_distance.value()),
            r.certificate.factor);
}

TEST(ParamApprox, OptimalCertificatesMatchOracle) {
  int optimal = 0;
  for (Vertex n = 3; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const oracle::SubsetTable table(g, 0, n - 1);
      for (std::int64_t k = 0; k < table.min_cut(); ++k) {
        const auto r = param_approx_max_length(Instance(g, 0, n - 1, k, 1), 1.0);
        ASSERT_EQ(r.solution.achieved_distance.is_finite(), true);
        if (r.certificate.kind == ApproxCertificate::Kind::kOptimal) {
          ASSERT_EQ(r.solution.achieved_distance, table.max_length(k));
          ++optimal;
        } else {
          ASSERT_LE(static_cast<double>(table.max_length(k).value()) /
                        static_cast<double>(r.solution.achieved_distance.value()),
                    r.certificate.factor);
        }
      }
    }
  }
  EXPECT_GT(optimal, 100);
}
