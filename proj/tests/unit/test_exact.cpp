#include <gtest/gtest.h>

#include "kcenter/exact/oracle.hpp"
#include "kcenter/graph/graph.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kcenter;

namespace {

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

}  // namespace

TEST(CoverRadius, Examples) {
  EXPECT_EQ(cover_radius(gen::path(7), VertexSet::full(7)), 0u);
  EXPECT_EQ(cover_radius(gen::path(7), VertexSet::of(7, {3})), 3u);
  EXPECT_EQ(cover_radius(gen::cycle(6), VertexSet::of(6, {0, 3})), 1u);
  EXPECT_THROW(cover_radius(gen::path(7), VertexSet(7)), Error);
}

TEST(VerifyCover, Examples) {
  const Graph p7 = gen::path(7);
  EXPECT_TRUE(verify_cover(p7, VertexSet::of(7, {3}), 3));
  EXPECT_FALSE(verify_cover(p7, VertexSet::of(7, {3}), 2));
  EXPECT_TRUE(verify_cover(p7, VertexSet::full(7), 0));
  const Graph split = GraphBuilder(4).add_edge(0, 1).add_edge(2, 3).build();
  EXPECT_FALSE(verify_cover(split, VertexSet::of(4, {0, 1}), 1000));
}

TEST(ExactKRadius, Examples) {
  const auto s = exact_k_radius(star(4), 1);
  EXPECT_EQ(s.radius, 1u);
  EXPECT_EQ(s.centers.members(), (std::vector<Vertex>{0}));
  EXPECT_EQ(exact_k_radius(gen::cycle(5), 5).radius, 0u);
  EXPECT_EQ(exact_k_radius(gen::cycle(5), 9).radius, 0u);
  EXPECT_EQ(exact_k_radius(gen::path(7), 2).radius, 2u);
  EXPECT_EQ(exact_k_radius(gen::cycle(12), 2).radius, 3u);
}

TEST(ExactKRadius, LexicographicallySmallestOptimum) {
  // P7 with k=2: {0,4} already reaches radius 2 and is the first such pair.
  EXPECT_EQ(exact_k_radius(gen::path(7), 2).centers.members(), (std::vector<Vertex>{0, 4}));
}

TEST(ExactKRadius, DisconnectedIsUnreachableBelowComponentCount) {
  const Graph split = GraphBuilder(4).add_edge(0, 1).add_edge(2, 3).build();
  EXPECT_EQ(exact_k_radius(split, 1).radius, kUnreachable);
  EXPECT_EQ(exact_k_radius(split, 2).radius, 1u);
}

TEST(ExactKRadius, BudgetGuard) {
  try {
    exact_k_radius(gen::cycle(30), 5, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_EQ(binomial_saturating(30, 5), 142506u);
  EXPECT_EQ(binomial_saturating(200, 100), UINT64_MAX);
}

TEST(ExactKRadius, AgreesWithUnprunedSearchAndIsCertified) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 11);
    const Dist M = trial % 3 == 0 ? static_cast<Dist>(gen::uniform(rng, 2, 5)) : 1;
    const Graph g = trial % 4 == 0 ? gen::gnp(rng, n, 0.3, M) : gen::connected(rng, n, 0.15, M);
    Dist prev = kUnreachable;
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto s = exact_k_radius(g, k);
      const std::uint64_t want = oracle::k_radius(g, k);
      ASSERT_EQ(s.radius == kUnreachable ? oracle::kInf : s.radius, want) << "trial " << trial << " k " << k;
      ASSERT_LE(s.centers.size(), k);
      ASSERT_EQ(cover_radius(g, s.centers), s.radius);
      ASSERT_LE(s.radius, prev);
      prev = s.radius;
    }
  }
}
