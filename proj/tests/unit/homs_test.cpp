#include <gtest/gtest.h>

#include <random>

#include "raag/autos.hpp"
#include "raag/conjugation.hpp"
#include "raag/error.hpp"
#include "raag/homs.hpp"
#include "raag/vertex_order.hpp"
#include "support/graphs.hpp"

namespace raag {
namespace {

using HomFn = HomImage (*)(const DefiningGraph&, VertexSet, const AutWord&);

std::string via(HomFn fn, const DefiningGraph& g, const char* rep, const char* f) {
  const HomImage r = fn(g, maximal_class_of(g, g.index(rep)), parse_autword(g, f));
  return format_autword(r.target.graph, r.word);
}

std::string span(HomFn fn, const DefiningGraph& g, const char* rep) {
  return g.format(fn(g, maximal_class_of(g, g.index(rep)), {}).target.span);
}

TEST(Restrict, Examples) {
  const auto g = testing::path(5);
  EXPECT_EQ(via(&restrict_to_star, g, "b", "pc(c|a)"), "pc(c|a)");
  EXPECT_EQ(span(&restrict_to_star, g, "b"), "{a,b,c}");
  EXPECT_EQ(via(&restrict_to_star, g, "c", "pc(c|a)"), "id");
  EXPECT_EQ(via(&restrict_to_star, g, "d", "pc(c|a)"), "id");
}

TEST(Exclude, Examples) {
  const auto g = testing::path(5);
  EXPECT_EQ(via(&exclude, g, "b", "tv(a,b)"), "id");
  EXPECT_EQ(span(&exclude, g, "b"), "{a,c,d,e}");
  EXPECT_EQ(via(&exclude, g, "c", "pc(c|e)"), "id");
  EXPECT_EQ(via(&exclude, g, "d", "inv(a)"), "inv(a)");
}

TEST(Project, Examples) {
  const auto g = testing::path(5);
  EXPECT_EQ(span(&project, g, "c"), "{b,d}");
  EXPECT_EQ(via(&project, g, "b", "tv(a,b)"), "id");
  EXPECT_EQ(via(&project, g, "b", "pc(c|a)"), "pc(c|a)");
  EXPECT_EQ(span(&project, g, "b"), "{a,c}");
  const auto k3 = testing::complete(3);
  EXPECT_EQ(via(&project, k3, "a", "tv(a,b); inv(c)"), "id");
  EXPECT_EQ(span(&project, k3, "a"), "{}");
}

TEST(InKr, Examples) {
  const auto g = testing::path(5);
  EXPECT_TRUE(in_kr(g, parse_autword(g, "pc(c|a)")));
  EXPECT_FALSE(in_kr(g, parse_autword(g, "tv(a,b)")));
  EXPECT_TRUE(in_kr(g, {}));
}

TEST(Homs, Errors) {
  const auto g = testing::path(5);
  const VertexSet a = VertexSet::singleton(g.index("a"));
  EXPECT_THROW(restrict_to_star(g, a, {}), InputError);
  EXPECT_THROW(maximal_class_of(g, g.index("a")), InputError);
  const VertexSet b = maximal_class_of(g, g.index("b"));
  EXPECT_THROW(exclude(g, b, parse_autword(g, "sym(a->e,b->d,d->b,e->a)")), InputError);
  const auto d = testing::make_graph({"x", "y", "z"}, {{"x", "y"}});
  EXPECT_THROW(in_kr(d, {}), InputError);
  EXPECT_THROW(restrict_to_star(d, maximal_class_of(d, d.index("x")), {}), InputError);
}

// Conjugation by u, written as a product of partial conjugations.
AutWord inner_by(const DefiningGraph& g, Vertex u, int sign) {
  AutWord f;
  for (VertexSet c : components(g, g.vertices() - g.star(u))) {
    f.push_back(partial_conjugation(u, c, sign));
  }
  return f;
}

// Maps descend to outer automorphisms: inserting inner automorphisms into a
// word changes the image only by an inner automorphism.
TEST(HomsProperties, WellDefinedOnOuterClasses) {
  std::mt19937_64 rng(3);
  for (const auto& g : testing::graph_corpus(6, true)) {
    if (g.size() > 6) continue;
    const auto gens = laurence_generators(g, GeneratorFilter::kPure);
    const auto cls = classify(g);
    for (int trial = 0; trial < 3; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      std::uniform_int_distribution<Vertex> vertex(0, g.size() - 1);
      AutWord f, h;
      for (int i = 0; i < 3; ++i) {
        const auto e = gens[pick(rng)];
        f.push_back(e);
        h.push_back(e);
        h = concat(h, inner_by(g, vertex(rng), i % 2 ? 1 : -1));
      }
      for (std::size_t i : cls.maximal) {
        for (HomFn fn : {&restrict_to_star, &exclude, &project}) {
          const HomImage a = fn(g, cls.classes[i], f);
          const HomImage b = fn(g, cls.classes[i], h);
          ASSERT_EQ(a.target.span, b.target.span);
          EXPECT_TRUE(is_inner(a.target.graph, concat(inverse(a.word), b.word)))
              << to_graph_text(g) << format_autword(g, h);
        }
      }
    }
  }
}

// Every kernel element found among short words is, modulo inner
// automorphisms, a product of hat-component conjugations.
TEST(HomsProperties, KernelGeneratedByHatConjugations) {
  for (const auto& g : testing::graph_corpus(4, true)) {
    std::vector<AutWord> basis;
    for (Vertex v = 0; v < g.size(); ++v) {
      const auto parts = vhat_components(g, v).nontrivial();
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        basis.push_back(vhat_conjugation(g, v, parts[i]));
      }
    }
    EXPECT_EQ(basis.size(), kr_rank(g));
    for (const auto& b : basis) EXPECT_TRUE(in_kr(g, b));

    const auto gens = laurence_generators(g, GeneratorFilter::kPure);
    std::vector<AutWord> words{{}};
    for (const auto& e : gens) {
      words.push_back({e});
      for (const auto& e2 : gens) words.push_back({e, e2.inverse()});
    }
    for (const auto& f : words) {
      if (!in_kr(g, f)) continue;
      // Search exponent vectors in [-2, 2].
      std::vector<int> exps(basis.size(), -2);
      bool found = false;
      while (!found) {
        AutWord p = inverse(f);
        for (std::size_t i = 0; i < basis.size(); ++i) p = concat(p, power(basis[i], exps[i]));
        found = is_inner(g, p);
        std::size_t k = 0;
        while (k < exps.size() && exps[k] == 2) exps[k++] = -2;
        if (k == exps.size()) break;
        ++exps[k];
      }
      EXPECT_TRUE(found) << to_graph_text(g) << format_autword(g, f);
    }
  }
}

}  // namespace
}  // namespace raag
