// Sanity checks for the reference computations themselves.

#include <gtest/gtest.h>

#include "support/graphs.hpp"
#include "support/oracles.hpp"

namespace raag::testing {
namespace {

TEST(Oracles, GraphCounts) {
  // Isomorphism classes of graphs on 1..7 vertices, and connected ones.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto gs = unlabelled_graphs(n);
    EXPECT_EQ(gs.size(), all[n - 1]);
    std::size_t c = 0;
    for (const auto& g : gs) c += is_connected(g) ? 1 : 0;
    EXPECT_EQ(c, connected[n - 1]);
  }
}

TEST(Oracles, BallSizes) {
  EXPECT_EQ(ball(discrete(2), 2).size(), 17u);
  EXPECT_EQ(ball(path(2), 2).size(), 13u);
}

TEST(Oracles, MinimalRepresentatives) {
  const auto edge = path(2);
  const auto reps = minimal_representatives(edge, {{0, 1}, {1, 1}, {0, -1}});
  EXPECT_EQ(reps, (std::set<Code>{{2}}));
  const auto swaps = minimal_representatives(edge, {{0, 1}, {1, 1}});
  EXPECT_EQ(swaps.size(), 2u);
  EXPECT_TRUE(oracle_equal(discrete(2), {}, {{0, 1}, {0, -1}}, 4));
}

TEST(Oracles, IntegerRank) {
  EXPECT_EQ(integer_rank({{1, 0}, {0, 1}, {1, 1}}), 2u);
  EXPECT_EQ(integer_rank({{2, 4}, {1, 2}}), 1u);
  EXPECT_EQ(integer_rank({}), 0u);
}

TEST(Oracles, KernelRankValues) {
  EXPECT_EQ(kr_rank_oracle(path(5)), 1u);
  EXPECT_EQ(kr_rank_oracle(path(3)), 0u);
  EXPECT_EQ(kr_rank_oracle(cycle(4)), 0u);
  EXPECT_EQ(kr_rank_oracle(spider()), 1u);
}

TEST(Oracles, BruteInner) {
  const auto p4 = path(4);
  const auto found = brute_inner(p4, {partial_conjugation(1, VertexSet::singleton(3))}, 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, (Word{{1, 1}}));
  EXPECT_FALSE(brute_inner(p4, {inversion(0)}, 2).has_value());
}

}  // namespace
}  // namespace raag::testing
