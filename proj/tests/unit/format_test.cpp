#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mve/format.hpp"
#include "mve/generators.hpp"

using namespace mve;

namespace {

ParseCode code_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseCode::kSyntax;
}

std::size_t line_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Format, ParsesSingleEdge) {
  const Instance inst = parse_instance("p mve 2 1\ns 1\nt 2\ne 1 2 1\n");
  EXPECT_EQ(inst.graph.vertex_count(), 2);
  EXPECT_EQ(inst.graph.edge_count(), 1);
  EXPECT_EQ(inst.s, 0);
  EXPECT_EQ(inst.t, 1);
  EXPECT_EQ(inst.k, 0);
  EXPECT_EQ(inst.ell, 1);
}

TEST(Format, CommentsAndParameters) {
  const Instance inst = parse_instance("# demo\n\np mve 3 2\ns 1\nt 3\nk 2\nl 7\n# mid\ne 1 2 4\ne 2 3 5\n");
  EXPECT_EQ(inst.k, 2);
  EXPECT_EQ(inst.ell, 7);
  EXPECT_EQ(inst.graph.edge(1).length, 5);
}

TEST(Format, ErrorCodes) {
  EXPECT_EQ(code_of("p mve 2 2\ns 1\nt 2\ne 1 2 1\ne 2 1 1\n"), ParseCode::kDuplicateEdge);
  EXPECT_EQ(line_of("p mve 2 2\ns 1\nt 2\ne 1 2 1\ne 2 1 1\n"), 5U);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\ne 1 1 1\n"), ParseCode::kSelfLoop);
  EXPECT_EQ(line_of("p mve 2 1\ns 1\nt 2\ne 1 1 1\n"), 4U);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 1\ne 1 2 1\n"), ParseCode::kSameTerminals);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\ne 1 2 0\n"), ParseCode::kNonPositiveLength);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 3\ne 1 2 1\n"), ParseCode::kVertexOutOfRange);
  EXPECT_EQ(code_of("s 1\np mve 2 1\n"), ParseCode::kMissingHeader);
  EXPECT_EQ(code_of(""), ParseCode::kMissingHeader);
  EXPECT_EQ(code_of("p mve 2 1\np mve 2 1\n"), ParseCode::kDuplicateHeader);
  EXPECT_EQ(code_of("p mve 2 2\ns 1\nt 2\ne 1 2 1\n"), ParseCode::kEdgeCountMismatch);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\ne 1 2 1\n"), ParseCode::kMissingTerminal);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\ne 1 2\n"), ParseCode::kSyntax);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\ne 1 2 x\n"), ParseCode::kSyntax);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\nq\n"), ParseCode::kSyntax);
  EXPECT_EQ(code_of("p mve 2 1\ns 1\nt 2\nl 0\ne 1 2 1\n"), ParseCode::kBadParameter);
}

TEST(Format, RoundTrip) {
  const RandomFamily families[] = {RandomFamily::kErdosRenyi, RandomFamily::kTreePlusF,
                                   RandomFamily::kClusterPlusX, RandomFamily::kSeriesParallel};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomParams p;
    p.max_length = 9;
    p.k = static_cast<std::int64_t>(seed);
    const Instance inst = gen_random(families[seed % 4], p, seed);
    const std::string text = emit_instance(inst);
    ASSERT_EQ(parse_instance(text), inst);
    EXPECT_EQ(emit_instance(parse_instance(text)), text);
  }
}
