#include <gtest/gtest.h>

#include <span>
#include <vector>

#include "kcenter/boolcover/boolcover.hpp"
#include "kcenter/graph/distance.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kcenter;

namespace {

std::vector<Vertex> all(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

std::vector<Vertex> set_bits(const Bitset& b) {
  std::vector<Vertex> out;
  b.for_each_set([&](std::size_t i) { out.push_back(static_cast<Vertex>(i)); });
  return out;
}

}  // namespace

TEST(UncoveredMask, Examples) {
  const Graph p5 = gen::path(5);
  DistanceTable t(p5);
  const auto V = all(5);
  const Vertex two[] = {2};
  EXPECT_EQ(set_bits(uncovered_mask(t, two, V, 1)[0].mask), (std::vector<Vertex>{0, 4}));
  EXPECT_TRUE(uncovered_mask(t, two, V, 2)[0].mask.none());
  EXPECT_EQ(uncovered_mask(t, two, V, -1)[0].mask.count(), 5u);

  // unreachable counts as uncovered
  const Graph split = GraphBuilder(3).add_edge(0, 1).build();
  const auto rows = all_pairs(split);
  const auto masks = uncovered_mask(std::span<const DistRow>(rows), all(3), 100);
  EXPECT_EQ(set_bits(masks[0].mask), (std::vector<Vertex>{2}));
  EXPECT_EQ(masks[2].candidate, 2u);
}

TEST(ExistsCoverTuple, Examples) {
  const Graph c6 = gen::cycle(6);
  DistanceTable t(c6);
  const auto V = all(6);
  const auto rows = uncovered_mask(t, V, V, 1);
  auto pair = exists_cover_tuple(rows, 2, V.size());
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(*pair, (std::vector<Vertex>{0, 3}));

  // Z empty: the first tuple
  const std::vector<Vertex> none;
  const auto empty_rows = uncovered_mask(t, V, none, 0);
  EXPECT_EQ(*exists_cover_tuple(empty_rows, 3, 0), (std::vector<Vertex>{0, 0, 0}));

  // arity 1 is a scan for an all-zero mask
  EXPECT_FALSE(exists_cover_tuple(rows, 1, V.size()).has_value());
  const auto wide = uncovered_mask(t, V, V, 3);
  EXPECT_EQ(*exists_cover_tuple(wide, 1, V.size()), (std::vector<Vertex>{0}));

  // arity 0
  EXPECT_TRUE(exists_cover_tuple(rows, 0, 0).has_value());
  EXPECT_FALSE(exists_cover_tuple(rows, 0, 6).has_value());
}

TEST(ExistsCoverTuple, BudgetGuard) {
  const Graph c = gen::cycle(40);
  DistanceTable t(c);
  const auto V = all(40);
  const auto rows = uncovered_mask(t, V, V, 1);
  try {
    exists_cover_tuple(rows, 4, V.size(), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(ExistsCoverTuple, MatchesBruteForceOnMixedGroups) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 16);
    const Graph g = gen::gnp(rng, n, 0.25, trial % 2 ? 3 : 1);
    const auto fw = oracle::floyd_warshall(g);
    DistanceTable table(g);
    const std::size_t arity = gen::uniform(rng, 1, 4);
    std::vector<std::vector<Vertex>> groups(arity);
    for (auto& grp : groups) {
      for (Vertex v = 0; v < n; ++v) {
        if (gen::coin(rng, 0.5)) grp.push_back(v);
      }
      if (grp.empty()) grp.push_back(static_cast<Vertex>(gen::uniform(rng, 0, n - 1)));
    }
    std::vector<Vertex> Z;
    for (Vertex v = 0; v < n; ++v) {
      if (gen::coin(rng, 0.7)) Z.push_back(v);
    }
    const Radius r = static_cast<Radius>(gen::uniform(rng, 0, 4));
    std::vector<std::vector<UncoveredRow>> masks;
    for (const auto& grp : groups) masks.push_back(uncovered_mask(table, grp, Z, r));
    std::vector<std::span<const UncoveredRow>> spans(masks.begin(), masks.end());
    const auto got = exists_cover_tuple(std::span<const std::span<const UncoveredRow>>(spans), Z.size());
    const bool want = oracle::tuple_cover_exists(fw, groups, Z, static_cast<std::uint64_t>(r));
    ASSERT_EQ(got.has_value(), want) << "trial " << trial;
    if (got) {
      ASSERT_EQ(got->size(), arity);
      for (std::size_t p = 0; p < arity; ++p) {
        ASSERT_TRUE(std::find(groups[p].begin(), groups[p].end(), (*got)[p]) != groups[p].end());
      }
      for (Vertex z : Z) {
        bool hit = false;
        for (Vertex c : *got) hit = hit || fw[c][z] <= static_cast<std::uint64_t>(r);
        ASSERT_TRUE(hit);
      }
    }
  }
}

TEST(ExistsCoverTuple, ReturnsLexicographicallyFirstHit) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 10);
    const Graph g = gen::connected(rng, n, 0.2);
    const auto fw = oracle::floyd_warshall(g);
    DistanceTable table(g);
    const auto V = all(n);
    const Radius r = static_cast<Radius>(gen::uniform(rng, 1, 3));
    const std::size_t arity = gen::uniform(rng, 1, 3);
    const auto rows = uncovered_mask(table, V, V, r);
    const auto got = exists_cover_tuple(rows, arity, n);
    // First tuple in lexicographic order, by direct enumeration.
    std::optional<std::vector<Vertex>> want;
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self) -> void {
      if (want) return;
      if (pick.size() == arity) {
        if (oracle::radius_of(fw, pick) <= static_cast<std::uint64_t>(r)) want = pick;
        return;
      }
      for (Vertex c = 0; c < n && !want; ++c) {
        pick.push_back(c);
        self(self);
        pick.pop_back();
      }
    };
    rec(rec);
    ASSERT_EQ(got, want) << "trial " << trial;
  }
}

TEST(IntersectBalls, Examples) {
  const Graph p5 = gen::path(5);
  DistanceTable t(p5);
  const Vertex one[] = {3};
  EXPECT_EQ(intersect_balls(t, one, 0).members(), (std::vector<Vertex>{3}));
  EXPECT_EQ(intersect_balls(t, std::span<const Vertex>(), 0).size(), 5u);
  const Vertex ends[] = {0, 4};
  EXPECT_EQ(intersect_balls(t, ends, 2).members(), (std::vector<Vertex>{2}));
}

TEST(IntersectBalls, MatchesDefinition) {
  gen::Rng rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 50);
    const Graph g = gen::gnp(rng, n, 0.08, trial % 2 ? 4 : 1);
    const auto fw = oracle::floyd_warshall(g);
    DistanceTable table(g);
    std::vector<Vertex> T;
    for (Vertex v = 0; v < n; ++v) {
      if (gen::coin(rng, 0.1)) T.push_back(v);
    }
    const Radius r = static_cast<Radius>(gen::uniform(rng, 0, 8));
    ASSERT_EQ(intersect_balls(table, T, r).members(), oracle::ball_intersection(fw, T, static_cast<std::uint64_t>(r)));
  }
}
