#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "hot/errors.hpp"
#include "hot/metrics.hpp"
#include "hot/report.hpp"
#include "oracle.hpp"

namespace hot {
namespace {

using testing::family;
using testing::make_hot;

Hypergraph chain(std::size_t n) {
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make_hot(n, edges);
}

TEST(RelevanceSetsFile, ParseDedupAndErrors) {
  const auto r = RelevanceSets::parse(R"({"sets": [["b", "a", "b"], ["c", "d"]]})");
  ASSERT_EQ(r.sets.size(), 2u);
  EXPECT_EQ(r.sets[0], (std::vector<NodeId>{NodeId("a"), NodeId("b")}));
  EXPECT_EQ(RelevanceSets::parse(r.to_json()).sets, r.sets);
  try {
    (void)RelevanceSets::parse(R"({"sets": [["a", "b"], ["a", "a"]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "$.sets[1]");
  }
  EXPECT_THROW((void)RelevanceSets::parse(R"({"sets": [["a", 1]]})"), ParseError);
  EXPECT_THROW((void)RelevanceSets::parse(R"([["a","b"]])"), ParseError);
  EXPECT_THROW((void)RelevanceSets::parse("{"), ParseError);
}

TEST(RelevanceSetsFile, ResolveListsEveryUnknownId) {
  const auto hot = make_hot(3, {{0, 1}});
  const auto r = RelevanceSets::parse(R"({"sets": [["n00", "zz"], ["yy", "n02", "zz"]]})");
  try {
    (void)r.resolve(hot);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.offenders(), (std::vector<std::string>{"yy", "zz"}));
  }
  const auto ok = RelevanceSets::parse(R"({"sets": [["n02", "n00"]]})").resolve(hot);
  EXPECT_EQ(ok, family({{0, 2}}));
}

TEST(Drel, SingleEdgeCliqueIsOne) {
  const auto s = drel(make_hot(3, {{0, 1, 2}}), family({{0, 1, 2}}));
  EXPECT_EQ(s.value, 1.0);
  EXPECT_EQ(s.ordered_pairs, 6u);
  EXPECT_EQ(s.one_hop_pairs, 6u);
}

TEST(Drel, ChainEndpointsIsThree) {
  EXPECT_EQ(drel(chain(4), family({{0, 3}})).value, 3.0);
}

TEST(Drel, DuplicatedSetLeavesValueUnchanged) {
  const auto hot = chain(5);
  EXPECT_EQ(drel(hot, family({{0, 2}})).value, drel(hot, family({{0, 2}, {0, 2}})).value);
}

TEST(Drel, PerSetMeansAreAveraged) {
  // Set {0,1}: 1. Set {0,2,4}: pairs 2,4,2 -> 8/3. Mean (1 + 8/3) / 2.
  EXPECT_DOUBLE_EQ(*drel(chain(5), family({{0, 1}, {0, 2, 4}})).value, (1.0 + 8.0 / 3.0) / 2.0);
}

TEST(Drel, EmptyFamilyIsUndefined) {
  const auto s = drel(chain(3), {});
  EXPECT_FALSE(s.value);
  EXPECT_EQ(s.reason, "set family is empty");
}

TEST(Drand, FullCoMembershipIsOne) {
  const auto hot = make_hot(6, {{0, 1, 2, 3, 4, 5}});
  EXPECT_EQ(drand(hot, family({{0, 5}, {1, 2, 3}})).value, 1.0);
}

TEST(Drand, StraddlingSetsAreUndefined) {
  const auto hot = make_hot(4, {{0, 1}, {2, 3}});
  const auto s = drand(hot, family({{0, 2}, {1, 3}}));
  EXPECT_FALSE(s.value);
  EXPECT_EQ(s.reason, "every pair is disconnected");
  EXPECT_EQ(s.excluded_pairs, 4u);
  EXPECT_EQ(s.skipped_sets, 2u);
}

TEST(Drand, PartlyConnectedSetExcludesPairs) {
  const auto hot = make_hot(4, {{0, 1}, {2, 3}});
  const auto s = drand(hot, family({{0, 1, 2}}));
  EXPECT_EQ(s.value, 1.0);
  EXPECT_EQ(s.connected_pairs, 2u);
  EXPECT_EQ(s.excluded_pairs, 4u);
  EXPECT_EQ(s.contributing_sets, 1u);
}

TEST(EffortRatio, TwoOverFiveIsFortyPercent) {
  const auto r = effort_ratio(chain(6), family({{0, 2}}), family({{0, 5}}));
  EXPECT_EQ(r.drel(), 2.0);
  EXPECT_EQ(r.drand(), 5.0);
  ASSERT_TRUE(r.effort_ratio);
  EXPECT_DOUBLE_EQ(*r.effort_ratio, 0.4);
}

TEST(EffortRatio, IdenticalFamiliesGiveOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto hot = testing::random_small_hot(seed, 12, 10, 4);
    const auto x = testing::random_family(seed, 12, 5, 4);
    const auto r = effort_ratio(hot, x, x);
    if (r.drel()) EXPECT_EQ(r.effort_ratio, 1.0);
  }
}

TEST(EffortRatio, UndefinedWithReason) {
  const auto edgeless = make_hot(4, {});
  const auto r = effort_ratio(edgeless, family({{0, 1}}), family({{2, 3}}));
  EXPECT_FALSE(r.effort_ratio);
  EXPECT_EQ(r.effort_ratio_reason, "DRel undefined: every pair is disconnected");
  EXPECT_EQ(r.rdp, 1.0);
  EXPECT_EQ(r.sigma_rel, 0.0);
  EXPECT_EQ(r.sigma_rand, 0.0);
  const auto no_random = effort_ratio(make_hot(4, {{0, 1}}), family({{0, 1}}), family({{2, 3}}));
  EXPECT_EQ(no_random.effort_ratio_reason, "DRand undefined: every pair is disconnected");
}

TEST(EffortRatio, EmptyRelevanceHasNoRdp) {
  const auto r = effort_ratio(chain(3), {}, {});
  EXPECT_FALSE(r.rdp);
  EXPECT_FALSE(r.effort_ratio);
}

TEST(Saturation, FullAndEmpty) {
  const auto full = saturation(make_hot(5, {{0, 1, 2, 3, 4}}), family({{0, 1}}), family({{2, 3, 4}}));
  EXPECT_EQ(full.relevant, 1.0);
  EXPECT_EQ(full.random, 1.0);
  const auto empty = saturation(make_hot(5, {}), family({{0, 1}}), family({{2, 3, 4}}));
  EXPECT_EQ(empty.relevant, 0.0);
  EXPECT_EQ(empty.random, 0.0);
  EXPECT_EQ(saturation(chain(3), {}, {}).relevant, 0.0);
}

TEST(Saturation, DisconnectedPairsStayInDenominator) {
  const auto s = saturation(make_hot(4, {{0, 1}}), family({{0, 1, 2}}), family({{0, 1}}));
  EXPECT_DOUBLE_EQ(s.relevant, 2.0 / 6.0);
  EXPECT_EQ(s.random, 1.0);
}

TEST(MakeRandomSets, MatchesSizeProfileAndSeed) {
  const auto like = family({{0, 1}, {2, 3, 4}, {0, 5, 6, 7}});
  const auto a = make_random_sets(20, like, 9);
  const auto b = make_random_sets(20, like, 9);
  EXPECT_EQ(a.sets, b.sets);
  EXPECT_EQ(a.seed, 9u);
  EXPECT_EQ(a.size_profile, (std::vector<std::size_t>{2, 3, 4}));
  for (std::size_t i = 0; i < like.size(); ++i) {
    ASSERT_EQ(a.sets[i].size(), like[i].size());
    EXPECT_TRUE(std::is_sorted(a.sets[i].begin(), a.sets[i].end()));
    EXPECT_EQ(std::adjacent_find(a.sets[i].begin(), a.sets[i].end()), a.sets[i].end());
    for (auto n : a.sets[i]) EXPECT_LT(n, 20u);
  }
  EXPECT_NE(make_random_sets(20, like, 10).sets, a.sets);
  EXPECT_THROW((void)make_random_sets(3, like, 0), ConfigError);
}

TEST(Alignment, Examples) {
  const auto hot = make_hot(4, {{0, 1}, {0, 1, 2}, {3}});
  const auto report = classify_alignment(hot, family({{0, 1}}), 0.5, 0.5);
  ASSERT_EQ(report.edges.size(), 3u);
  EXPECT_EQ(report.edges[0].fraction, 1.0);
  EXPECT_TRUE(report.edges[0].alpha_aligned);
  EXPECT_FALSE(report.edges[0].beta_non_aligned);
  EXPECT_DOUBLE_EQ(*report.edges[1].fraction, 1.0 / 3.0);
  EXPECT_EQ(report.edges[1].pair_count, 3u);
  EXPECT_EQ(report.edges[1].relevant_pairs, 1u);
  EXPECT_FALSE(report.edges[1].alpha_aligned);
  EXPECT_TRUE(report.edges[1].beta_non_aligned);
  EXPECT_FALSE(report.edges[2].fraction);
  EXPECT_FALSE(report.edges[2].alpha_aligned);
  EXPECT_FALSE(report.edges[2].beta_non_aligned);
  EXPECT_TRUE(classify_alignment(hot, family({{0, 1}}), 1.0, 0.0).edges[0].alpha_aligned);
  EXPECT_THROW((void)classify_alignment(hot, {}, 1.5, 0.5), InputError);
  EXPECT_THROW((void)classify_alignment(hot, {}, 0.5, -0.1), InputError);
}

TEST(Alignment, MatchesExhaustivePairs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto hot = testing::random_small_hot(seed, 15, 12, 6);
    const auto r = testing::random_family(seed, 15, 6, 5);
    const RelevantPairs pairs(r);
    const auto report = classify_alignment(hot, r, 0.5, 0.5);
    for (EdgeIndex e = 0; e < hot.edge_count(); ++e) {
      const auto& members = hot.hyperedge(e).members;
      const std::vector<NodeIndex> m(members.begin(), members.end());
      EXPECT_EQ(report.edges[e].fraction, oracle::relevant_fraction(m, r));
      EXPECT_EQ(relevant_fraction(m, pairs), oracle::relevant_fraction(m, r));
    }
  }
}

TEST(RelevantPairs, ListIsSortedAndSymmetric) {
  const RelevantPairs p(family({{2, 0, 1}, {1, 0}}));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.contains(1, 0));
  EXPECT_TRUE(p.contains(0, 2));
  EXPECT_FALSE(p.contains(0, 0));
  EXPECT_EQ(p.list(), (std::vector<std::pair<NodeIndex, NodeIndex>>{{0, 1}, {0, 2}, {1, 2}}));
}

// Property: every reported number equals the brute-force oracle exactly.
TEST(Properties, MatchOracleExactly) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 29;
    const auto hot = testing::random_small_hot(seed, n, 15, 6);
    const auto r = testing::random_family(seed, n, 1 + seed % 7, 5);
    const auto rp = testing::random_family(seed + 1000, n, 1 + seed % 7, 5);
    const auto got = effort_ratio(hot, r, rp);
    const auto want = oracle::metrics(hot, r, rp);
    EXPECT_EQ(got.drel(), want.drel) << seed;
    EXPECT_EQ(got.drand(), want.drand) << seed;
    EXPECT_EQ(got.effort_ratio, want.er) << seed;
    EXPECT_EQ(got.rdp, want.rdp) << seed;
    EXPECT_EQ(got.sigma_rel, want.sigma_rel) << seed;
    EXPECT_EQ(got.sigma_rand, want.sigma_rand) << seed;
  }
}

// Properties: ER < 1 iff DRel < DRand; RDP in [0,1] and 0 iff all relevant
// pairs connect; sigma_rel = 1 implies DRel = 1.
TEST(Properties, Invariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 20;
    const auto hot = testing::random_small_hot(seed, n, 3 + seed % 12, 5);
    const auto r = testing::random_family(seed, n, 1 + seed % 5, 4);
    const auto rep = evaluate(hot, r, seed);
    ASSERT_TRUE(rep.rdp);
    EXPECT_GE(*rep.rdp, 0.0);
    EXPECT_LE(*rep.rdp, 1.0);
    EXPECT_EQ(*rep.rdp == 0.0, rep.relevant.excluded_pairs == 0);
    if (*rep.rdp < 1.0) EXPECT_TRUE(rep.drel());
    if (rep.effort_ratio) EXPECT_EQ(*rep.effort_ratio < 1.0, *rep.drel() < *rep.drand());
    if (rep.sigma_rel == 1.0) EXPECT_EQ(rep.drel(), 1.0);
    EXPECT_GE(rep.sigma_rel, 0.0);
    EXPECT_LE(rep.sigma_rand, 1.0);
    EXPECT_EQ(rep.relevant.ordered_pairs, rep.relevant.connected_pairs + rep.relevant.excluded_pairs);
  }
}

// Property: hyperedge texts and ids play no part in any metric.
TEST(Properties, RelabelingEdgesChangesNothing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto hot = testing::random_small_hot(seed, 12, 10, 5);
    HypergraphBuilder b;
    for (const auto& node : hot.nodes()) b.add_node(node.id, node.text);
    for (const auto& e : hot.hyperedges()) {
      std::vector<NodeId> members;
      for (auto m : e.members) members.push_back(hot.node(m).id);
      b.add_hyperedge(HyperedgeId("x-" + e.id.str()), "something else entirely", members);
    }
    const auto relabeled = b.build();
    const auto r = testing::random_family(seed, 12, 4, 4);
    auto a = evaluate(hot, r, seed);
    auto c = evaluate(relabeled, r, seed);
    EXPECT_EQ(report_json(a), report_json(c));
  }
}

TEST(Report, JsonShape) {
  auto rep = effort_ratio(chain(6), family({{0, 2}}), family({{0, 5}}), 42);
  rep.label = "Chain";
  const auto j = nlohmann::json::parse(report_json(rep));
  EXPECT_EQ(j["label"], "Chain");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["hyperedge_count"], 5);
  EXPECT_DOUBLE_EQ(j["effort_ratio"].get<double>(), 0.4);
  EXPECT_EQ(j["drel"]["value"], 2.0);
  EXPECT_EQ(j["rdp"], 0.0);
  EXPECT_FALSE(j.contains("effort_ratio_reason"));
  EXPECT_EQ(report_json(rep).back(), '\n');

  const auto undefined = effort_ratio(make_hot(4, {}), family({{0, 1}}), family({{2, 3}}));
  const auto u = nlohmann::json::parse(report_json(undefined));
  EXPECT_TRUE(u["effort_ratio"].is_null());
  EXPECT_EQ(u["drel"]["reason"], "every pair is disconnected");
  EXPECT_EQ(u["effort_ratio_reason"], "DRel undefined: every pair is disconnected");
}

TEST(Report, Table) {
  auto a = effort_ratio(chain(6), family({{0, 2}}), family({{0, 5}}));
  a.label = "All-Words (1%)";
  auto b = effort_ratio(make_hot(4, {}), family({{0, 1}}), family({{2, 3}}));
  b.label = "Empty";
  const std::vector<EvalReport> reports{a, b};
  EXPECT_EQ(report_table(reports),
            "Method         | Effort Ratio | Number of Hyperedges |   RDP\n"
            "---------------+--------------+----------------------+------\n"
            "All-Words (1%) |        0.400 |                    5 | 0.000\n"
            "Empty          |          n/a |                    0 | 1.000\n");
}

}  // namespace
}  // namespace hot
