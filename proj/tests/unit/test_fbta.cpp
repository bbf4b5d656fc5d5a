#include <gtest/gtest.h>

#include "support.hpp"

using namespace fairdiv;
using fairdiv::testing::make_instance;
using fairdiv::testing::make_x;

// Ratio keys on e2: agents 1 and 2 have 0.8/4.8 = 1/6, agent 3 has
// 0.8/5.4 = 4/27, so agent 3 bids first and takes all of e2.
TEST(Fbta, SixAgentExampleFollowsTheRatioKey) {
  const FbtaResult r = fbta_chores(six_agent_instance());
  const FractionalAllocation expected = make_x({
      {"4/7", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "1/2", "0", "0"},
      {"3/7", "0", "0", "1/8", "0", "0"},
      {"0", "1", "1/8", "0", "0", "0"},
      {"0", "0", "0", "3/8", "1", "1/8"},
      {"0", "0", "7/8", "0", "0", "7/8"},
  });
  EXPECT_EQ(r.allocation, expected);
  EXPECT_EQ(r.allocation, fairdiv::testing::replay_chores(six_agent_instance(), fairdiv::testing::ReplayKey::ratio));
}

// The published matrix for this instance is what a smallest-cost key
// produces; the ratio key gives the matrix above.
TEST(Fbta, PublishedSixAgentMatrixIsTheSmallestCostReplay) {
  using fairdiv::testing::ReplayKey;
  const Instance inst = six_agent_instance();
  EXPECT_EQ(fairdiv::testing::replay_chores(inst, ReplayKey::raw_cost), fairdiv::testing::published_six_agent_allocation());
  EXPECT_NE(fbta_chores(inst).allocation, fairdiv::testing::published_six_agent_allocation());
  EXPECT_LT(inst.cost(3, 1) / inst.total_cost(3), inst.cost(1, 1) / inst.total_cost(1));
}

// The smallest-cost key can strand an item: agent 0 fills exactly on e1 and
// agent 1 stops at 4/5 of e2.
TEST(Fbta, SmallestCostKeyIsNotSafe) {
  using fairdiv::testing::ReplayKey;
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"1/2", "1/2"}, {"3/5", "1"}});
  EXPECT_THROW((void)fairdiv::testing::replay_chores(inst, ReplayKey::raw_cost), std::logic_error);
  const FbtaResult r = fbta_chores(inst);
  EXPECT_TRUE(r.allocation.is_complete());
  EXPECT_EQ(r.allocation, fairdiv::testing::replay_chores(inst, ReplayKey::ratio));
}

TEST(Fbta, SixAgentTraceRecordsSuccessors) {
  const FbtaResult r = fbta_chores(six_agent_instance());
  const auto& s = r.trace.successor;
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0], (Successor{2, 0}));
  EXPECT_EQ(s[1], (Successor{2, 3}));
  EXPECT_EQ(s[2], (Successor{4, 3}));
  EXPECT_EQ(s[3], (Successor{5, 2}));
  EXPECT_EQ(s[4], (Successor{5, 5}));
  EXPECT_FALSE(s[5].has_value());
  EXPECT_EQ(r.trace.last_item[2], std::optional<ItemId>{3});
  EXPECT_FALSE(r.trace.last_item[5].has_value());
  EXPECT_EQ(r.trace.events.front(), (TraceEvent{0, 0, Rational(4, 7), true}));
}

TEST(Fbta, ExactFitLeavesNoFractionalItem) {
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"1", "1"}, {"1", "1"}});
  const FbtaResult r = fbta_chores(inst);
  EXPECT_EQ(r.allocation, make_x({{"1", "0"}, {"0", "1"}}));
  EXPECT_TRUE(fractional_items(r.allocation).empty());
  EXPECT_FALSE(r.trace.successor[0].has_value());
  EXPECT_FALSE(r.trace.successor[1].has_value());
  EXPECT_TRUE(r.trace.events[0].inactivated);
}

TEST(Fbta, SingleAgentTakesEverything) {
  const Instance chores = make_instance(Kind::chores, {"1"}, {{"1/5", "1/2", "1"}});
  const FbtaResult rc = fbta_chores(chores);
  EXPECT_EQ(rc.allocation, make_x({{"1", "1", "1"}}));
  EXPECT_EQ(bundle_cost(chores, rc.allocation, 0), wprop_share(chores, 0));

  const Instance goods = make_instance(Kind::goods, {"1"}, {{"1/5", "1/2", "1"}});
  EXPECT_EQ(fbta_goods(goods).allocation, make_x({{"1", "1", "1"}}));
}

TEST(Fbta, GoodsExactFitHandsTheRestToTheLastAgent) {
  const Instance inst = make_instance(Kind::goods, {"1/2", "1/2"}, {{"1", "1"}, {"1", "1"}});
  const FbtaResult r = fbta_goods(inst);
  EXPECT_EQ(r.allocation, make_x({{"1", "0"}, {"0", "1"}}));
  EXPECT_TRUE(fractional_items(r.allocation).empty());
}

// Weights (1/4, 3/4), both rows (1/2, 1): WPROP = (3/8, 9/8). On e1 the keys
// tie at 1/3, so agent 0 bids first and stops after 3/4 of it; agent 1 is
// then the only active agent and takes the remaining 1/4 and all of e2.
TEST(Fbta, GoodsReplayByHand) {
  const Instance inst = make_instance(Kind::goods, {"1/4", "3/4"}, {{"1/2", "1"}, {"1/2", "1"}});
  EXPECT_EQ(wprop_share(inst, 0), Rational(3, 8));
  EXPECT_EQ(wprop_share(inst, 1), Rational(9, 8));
  const FbtaResult r = fbta_goods(inst);
  EXPECT_EQ(r.allocation, make_x({{"3/4", "0"}, {"1/4", "1"}}));
  EXPECT_EQ(r.trace.successor[0], (Successor{1, 0}));
  ASSERT_EQ(r.trace.events.size(), 3u);
  EXPECT_EQ(r.trace.events[0], (TraceEvent{0, 0, Rational(3, 4), true}));
  EXPECT_EQ(r.trace.events[1], (TraceEvent{0, 1, Rational(1, 4), false}));
  EXPECT_EQ(bundle_cost(inst, r.allocation, 1), Rational(9, 8));
}

TEST(Fbta, GoodsPicksTheLargestKey) {
  // Agent 1 values e1 relatively more, so it bids first.
  const Instance inst = make_instance(Kind::goods, {"1/2", "1/2"}, {{"1/10", "1"}, {"1/2", "1/2"}});
  const FbtaResult r = fbta_goods(inst);
  EXPECT_EQ(r.trace.events.front().agent, 1u);
  for (AgentId i = 0; i < 2; ++i) EXPECT_GE(bundle_cost(inst, r.allocation, i), wprop_share(inst, i));
}

TEST(Fbta, ZeroCostItemIsTakenWhole) {
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"0", "1"}, {"1", "1"}});
  const FbtaResult r = fbta_chores(inst);
  EXPECT_EQ(r.allocation.at(0, 0), Rational(1));
}

TEST(Fbta, RejectsBadInput) {
  const Instance unsorted = make_instance(Kind::chores, {"1/2", "1/2"}, {{"0.2", "0.5"}, {"0.6", "0.3"}});
  EXPECT_THROW((void)fbta_chores(unsorted), std::invalid_argument);
  const Instance goods = make_instance(Kind::goods, {"1"}, {{"1"}});
  EXPECT_THROW((void)fbta_chores(goods), std::invalid_argument);
  EXPECT_THROW((void)fbta_goods(six_agent_instance()), std::invalid_argument);
  const Instance degenerate = make_instance(Kind::chores, {"1/2", "1/2"}, {{"0", "0"}, {"1", "1"}});
  EXPECT_THROW((void)fbta_chores(degenerate), std::invalid_argument);
}

TEST(Fbta, FractionalItemsOfTheSixAgentExample) {
  const std::vector<FractionalItem> published = {{0, {0, 2}}, {1, {1, 2, 3}}, {2, {3, 5}}, {4, {4, 5}}};
  EXPECT_EQ(fractional_items(fairdiv::testing::published_six_agent_allocation()), published);
  const FbtaResult r = fbta_chores(six_agent_instance());
  const std::vector<FractionalItem> expected = {{0, {0, 2}}, {2, {3, 5}}, {3, {1, 2, 4}}, {5, {4, 5}}};
  EXPECT_EQ(fractional_items(r.allocation), expected);
  EXPECT_EQ(fractional_items(r.allocation, r.trace), expected);
}

TEST(Fbta, FractionalItemsOfSmallMatrices) {
  EXPECT_TRUE(fractional_items(make_x({{"1", "0"}, {"0", "1"}})).empty());
  const std::vector<FractionalItem> half = {{0, {0, 1}}};
  EXPECT_EQ(fractional_items(make_x({{"1/2"}, {"1/2"}})), half);
}

TEST(Fbta, TraceExportIsOneEventPerLine) {
  const FbtaResult r = fbta_chores(six_agent_instance());
  const std::string text = export_trace(r.trace);
  EXPECT_EQ(text.rfind("# item agent fraction inactivated\n0 0 4/7 1\n0 2 3/7 0\n", 0), 0u);
}

class FbtaProperties : public ::testing::TestWithParam<Kind> {};

TEST_P(FbtaProperties, HoldOnRandomInstances) {
  const Kind kind = GetParam();
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Instance inst = reduce_to_ido(fairdiv::testing::suite_instance(seed, kind)).instance;
    if (!validate_instance(inst).degenerate_agents.empty()) continue;
    const FbtaResult r = run_fbta(inst);
    ASSERT_TRUE(r.allocation.is_complete()) << seed;

    std::vector<bool> stopped(inst.agents(), false);
    std::vector<Rational> per_item(inst.items());
    for (const auto& ev : r.trace.events) {
      per_item[ev.item] += ev.fraction;
      if (ev.inactivated) {
        ASSERT_FALSE(stopped[ev.agent]) << "agent inactivated twice";
        stopped[ev.agent] = true;
      }
    }
    for (const auto& f : per_item) EXPECT_EQ(f, Rational(1));

    for (AgentId i = 0; i < inst.agents(); ++i) {
      const Rational got = bundle_cost(inst, r.allocation, i);
      const Rational share = wprop_share(inst, i);
      if (kind == Kind::chores) {
        EXPECT_LE(got, share);
        if (stopped[i]) EXPECT_EQ(got, share);
      } else {
        EXPECT_GE(got, share);
      }
      if (r.trace.successor[i]) {
        EXPECT_TRUE(stopped[i]);
        EXPECT_GT(r.allocation.at(i, r.trace.successor[i]->item), Rational(0));
      }
    }
    EXPECT_LE(fractional_items(r.allocation).size(), inst.agents() - 1);
    EXPECT_EQ(run_fbta(inst).trace, r.trace);
    if (kind == Kind::chores) {
      EXPECT_EQ(r.allocation, fairdiv::testing::replay_chores(inst, fairdiv::testing::ReplayKey::ratio));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothKinds, FbtaProperties, ::testing::Values(Kind::chores, Kind::goods),
                         [](const auto& info) { return std::string(to_string(info.param)); });
