#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "raag/error.hpp"
#include "raag/word.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

namespace raag {
namespace {

Word w(const DefiningGraph& g, const char* text) { return parse_word(g, text); }

std::string nf(const DefiningGraph& g, const char* text) {
  return format_word(g, normal_form(g, w(g, text)));
}

Word random_word(const DefiningGraph& g, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Vertex> vertex(0, g.size() - 1);
  std::bernoulli_distribution sign;
  Word out;
  for (std::size_t i = len(rng); i > 0; --i) out.push_back({vertex(rng), sign(rng) ? 1 : -1});
  return out;
}

// Vertex order first, then +1 before -1.
testing::Code lexicographically_least(const std::set<testing::Code>& reps) {
  auto key = [](const testing::Code& c) {
    std::vector<int> k;
    for (int x : c) k.push_back(2 * std::abs(x) + (x < 0 ? 1 : 0));
    return k;
  };
  return *std::min_element(reps.begin(), reps.end(),
                           [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

TEST(NormalForm, Examples) {
  const auto edge = testing::path(2);
  EXPECT_EQ(nf(edge, "b a"), "a b");
  EXPECT_EQ(nf(edge, "a b a^-1"), "b");
  const auto free = testing::discrete(2);
  EXPECT_EQ(nf(free, "a b b^-1 a"), "a^2");
  EXPECT_EQ(nf(free, "1"), "1");
}

TEST(NormalForm, PlusBeforeMinusTieBreak) {
  const auto edge = testing::path(2);
  EXPECT_EQ(nf(edge, "b^-1 a^-1"), "a^-1 b^-1");
  EXPECT_EQ(format_word(edge, normal_form(edge, w(edge, "b^3 a^-2"))), "a^-2 b^3");
}

TEST(WordsEqual, Examples) {
  const auto edge = testing::path(2);
  EXPECT_TRUE(words_equal(edge, w(edge, "a b"), w(edge, "b a")));
  const auto free = testing::discrete(2);
  EXPECT_FALSE(words_equal(free, w(free, "a b"), w(free, "b a")));
  const auto p3 = testing::path(3);
  EXPECT_FALSE(words_equal(p3, w(p3, "a c"), w(p3, "c a")));
}

TEST(CyclicReduce, Examples) {
  const auto free = testing::discrete(2);
  const auto r1 = cyclic_reduce(free, w(free, "a b a^-1"));
  EXPECT_EQ(format_word(free, r1.core), "b");
  EXPECT_EQ(format_word(free, r1.conjugator), "a");
  const auto edge = testing::path(2);
  const auto r2 = cyclic_reduce(edge, w(edge, "a b a^-1"));
  EXPECT_EQ(format_word(edge, r2.core), "b");
  EXPECT_TRUE(r2.conjugator.empty());
  const auto r3 = cyclic_reduce(edge, {});
  EXPECT_TRUE(r3.core.empty());
  EXPECT_TRUE(r3.conjugator.empty());
}

TEST(MaxPower, Examples) {
  const auto free = testing::discrete(2);
  const Vertex a = free.index("a");
  EXPECT_EQ(max_power(free, w(free, "a b a a"), a), 2u);
  EXPECT_EQ(max_power(free, w(free, "a b a^-1"), a), 1u);
  EXPECT_EQ(max_power(free, w(free, "b b"), a), 0u);
  // u and v do not commute with w.
  const auto g = testing::discrete(3);
  EXPECT_EQ(max_power(g, w(g, "a b c a^-2"), g.index("a")), 2u);
}

TEST(Centralizes, Examples) {
  const auto g = testing::path(3);
  VertexSet ac;
  ac.insert(g.index("a"));
  ac.insert(g.index("c"));
  EXPECT_TRUE(centralizes(g, w(g, "b"), ac));
  EXPECT_FALSE(centralizes(g, w(g, "a"), VertexSet::singleton(g.index("c"))));
  EXPECT_TRUE(centralizes(g, {}, ac));
}

TEST(ParseWord, FormatsAndErrors) {
  const auto g = testing::path(3);
  EXPECT_EQ(w(g, "a^3").size(), 3u);
  EXPECT_EQ(w(g, "b^-2"), (Word{{1, -1}, {1, -1}}));
  EXPECT_THROW(w(g, "z"), InputError);
  EXPECT_THROW(w(g, "a^0"), InputError);
  EXPECT_THROW(w(g, "a^x"), InputError);
  EXPECT_THROW(max_power(g, {}, 7), InputError);
}

// Oracle comparisons on every isomorphism class with up to 4 vertices.
TEST(WordProperties, OracleAgreement) {
  std::mt19937_64 rng(7);
  for (const auto& g : testing::graph_corpus(4, false)) {
    for (int trial = 0; trial < 40; ++trial) {
      const Word x = random_word(g, rng, 6);
      const NormalForm n = normal_form(g, x);
      EXPECT_EQ(normal_form(g, n.word()).word(), n.word());
      const auto reps = testing::minimal_representatives(g, x);
      EXPECT_EQ(n.size(), reps.begin()->size());
      EXPECT_TRUE(reps.contains(testing::encode(n.word())));
      EXPECT_EQ(lexicographically_least(reps), testing::encode(n.word()));
      for (Vertex v = 0; v < g.size(); ++v) {
        EXPECT_EQ(max_power(g, x, v), testing::oracle_max_power(g, x, v));
      }

      const Word y = random_word(g, rng, 4);
      EXPECT_EQ(words_equal(g, y, concat(y, concat(x, inverse(x)))), true);
      EXPECT_EQ(words_equal(g, x, y), testing::oracle_equal(g, x, y));
      // Short words again with bounded inverse-pair insertions allowed.
      const Word xs(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(x.size(), 3)));
      const Word ys(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(y.size(), 3)));
      EXPECT_EQ(words_equal(g, xs, ys), testing::oracle_equal(g, xs, ys, 5));

      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.size()); ++bits) {
        const VertexSet s(bits);
        bool commutes = true;
        for (Vertex v : s) {
          commutes = commutes && words_equal(g, concat(x, generator(v)), concat(generator(v), x));
        }
        EXPECT_EQ(centralizes(g, x, s), commutes);
      }

      const auto cr = cyclic_reduce(g, x);
      EXPECT_TRUE(words_equal(g, x, concat(concat(cr.conjugator, cr.core.word()), inverse(cr.conjugator))));
      for (const Word& c : testing::ball(g, 2)) {
        EXPECT_LE(cr.core.size(), normal_form(g, concat(concat(c, x), inverse(c))).size());
      }
    }
  }
}

}  // namespace
}  // namespace raag
