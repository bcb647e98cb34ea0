#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "hot/errors.hpp"
#include "hot/metrics.hpp"
#include "hot/random.hpp"
#include "hot/serialization.hpp"

namespace hot {
namespace {

std::vector<NodeId> ids(std::size_t n) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(testing::node_name(i));
  return out;
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  EXPECT_EQ(seen.size(), 7u);
  for (const auto& [_, count] : seen) EXPECT_NEAR(count, 1000, 150);
  EXPECT_THROW((void)rng.below(0), InputError);
}

TEST(Rng, FrozenSequence) {
  // mt19937_64 output is fixed by the standard; the 10000th value of the
  // default-seeded engine is 9981545732273789042.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
  Rng a(5489), b(5489);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
}

TEST(Rng, SampleIsSortedDistinct) {
  Rng rng(3);
  for (std::uint32_t n : {1u, 5u, 50u}) {
    for (std::uint32_t k = 0; k <= n; k += std::max(1u, n / 5)) {
      const auto s = rng.sample(n, k);
      ASSERT_EQ(s.size(), k);
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
      for (auto v : s) EXPECT_LT(v, n);
    }
  }
  EXPECT_EQ(rng.sample(4, 4), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_THROW((void)rng.sample(3, 4), InputError);
}

TEST(Rng, UnitInHalfOpenInterval) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomHot, SizesLabelsAndDeterminism) {
  const auto node_ids = ids(30);
  const auto a = random_hot(node_ids, 120, 17);
  EXPECT_EQ(a.node_count(), 30u);
  EXPECT_EQ(a.edge_count(), 120u);
  EXPECT_EQ(a.hyperedge(0).id.str(), "random-000");
  EXPECT_EQ(a.hyperedge(0).label, "random-000");
  std::map<std::size_t, int> sizes;
  for (const auto& e : a.hyperedges()) {
    EXPECT_GE(e.members.size(), 2u);
    EXPECT_LE(e.members.size(), 10u);
    ++sizes[e.members.size()];
  }
  EXPECT_EQ(sizes.size(), 9u);
  EXPECT_EQ(serialize(random_hot(node_ids, 120, 17)), serialize(a));
  EXPECT_NE(serialize(random_hot(node_ids, 120, 18)), serialize(a));
}

TEST(RandomHot, CapsSizesAtNodeCountAndKeepsTexts) {
  const auto base = testing::make_hot(3, {});
  const auto h = random_hot(base, 5, 1);
  EXPECT_EQ(h.hyperedge(4).id.str(), "random-4");
  for (const auto& e : h.hyperedges()) EXPECT_LE(e.members.size(), 3u);
  EXPECT_EQ(h.node(0).text, "node 0");
  const auto fixed = random_hot(ids(10), 10, 2, {4, 4});
  for (const auto& e : fixed.hyperedges()) EXPECT_EQ(e.members.size(), 4u);
}

// Regression: one seed used for both the HoT and R' must not make R' replay
// the hyperedges.
TEST(RandomHot, IndependentOfRandomSetsWithSameSeed) {
  const auto hot = random_hot(ids(50), 40, 7);
  SetFamily edges;
  for (const auto& e : hot.hyperedges()) edges.emplace_back(e.members.begin(), e.members.end());
  const auto sets = make_random_sets(50, edges, 7).sets;
  std::size_t identical = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) identical += sets[i] == edges[i];
  EXPECT_LT(identical, 3u);
}

TEST(RandomHot, Errors) {
  EXPECT_THROW((void)random_hot(ids(5), 0, 1), InputError);
  EXPECT_THROW((void)random_hot(ids(1), 3, 1), InputError);
  EXPECT_THROW((void)random_hot(ids(5), 3, 1, {1, 3}), InputError);
  EXPECT_THROW((void)random_hot(ids(5), 3, 1, {4, 3}), InputError);
}

}  // namespace
}  // namespace hot
