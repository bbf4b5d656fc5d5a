#include <gtest/gtest.h>

#include "support.hpp"

using namespace fairdiv;
using fairdiv::testing::make_instance;
using fairdiv::testing::R;

TEST(Rational, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(R("0.7"), Rational(7, 10));
  EXPECT_EQ(R("1/3"), Rational(1, 3));
  EXPECT_EQ(R("2/4").str(), "1/2");
  EXPECT_EQ(R("-0.125"), Rational(-1, 8));
  EXPECT_EQ(R("3").str(), "3");
  EXPECT_EQ(R(".5"), Rational(1, 2));
  EXPECT_EQ(R("+4/6"), Rational(2, 3));
  EXPECT_EQ(R("0.1") + R("0.2"), R("0.3"));
}

TEST(Rational, RejectsMalformedTokens) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/-2", "1e5", "/3", "0x10", "."}) {
    EXPECT_THROW((void)Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, ArithmeticAndRendering) {
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).str(), "1/2");
  EXPECT_EQ((Rational(2, 3) * Rational(3, 4)).str(), "1/2");
  EXPECT_EQ((Rational(1) / Rational(3)).str(), "1/3");
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Rational(2, 3).decimal(3), "0.667");
  EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
  EXPECT_EQ(Rational(5).decimal(0), "5");
  EXPECT_EQ(positive_part(Rational(-1, 2)), Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  // values far outside 64-bit range stay exact
  Rational big(1);
  for (int k = 0; k < 40; ++k) big *= Rational(1000003);
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
}

TEST(Model, WpropShareOfTheSixAgentExample) {
  const Instance inst = six_agent_instance();
  EXPECT_EQ(wprop_share(inst, 0), Rational(2, 5));
  // 1/3 of 0.8 + 0.8 + 0.8 + 1 + 1 + 1
  EXPECT_EQ(wprop_share(inst, 5), Rational(9, 5));
  const std::vector<Rational> expected = {R("2/5"), R("2/5"), R("2/5"), R("9/10"), R("3/2"), R("9/5")};
  for (AgentId i = 0; i < 6; ++i) EXPECT_EQ(wprop_share(inst, i), expected[i]);
  EXPECT_THROW((void)wprop_share(inst, 6), std::out_of_range);
}

TEST(Model, WpropShareIsZeroForAllZeroCosts) {
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"0", "0"}, {"1", "1"}});
  EXPECT_EQ(wprop_share(inst, 0), Rational(0));
}

TEST(Model, SubsidyOfAgentOneHoldingFirstItem) {
  const Instance inst = six_agent_instance();
  IntegralAllocation alloc{{0, 1, 3, 4, 4, 5}};
  const SubsidyVector s = compute_subsidies(inst, alloc);
  EXPECT_EQ(s.per_agent[0], Rational(3, 10));  // 0.7 - 0.4
  Rational sum;
  for (const auto& v : s.per_agent) sum += v;
  EXPECT_EQ(sum, s.total);
  EXPECT_TRUE(satisfies_wprops(inst, alloc, s.per_agent));
}

TEST(Model, SubsidiesAreZeroWhenBundlesMeetTheirShares) {
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"1", "1"}, {"1", "1"}});
  const SubsidyVector s = compute_subsidies(inst, IntegralAllocation{{0, 1}});
  EXPECT_EQ(s.per_agent, (std::vector<Rational>{Rational(0), Rational(0)}));
  EXPECT_EQ(s.total, Rational(0));
}

TEST(Model, SubsidiesRejectIncompleteAllocations) {
  const Instance inst = make_instance(Kind::chores, {"1/2", "1/2"}, {{"1", "1"}, {"1", "1"}});
  EXPECT_THROW((void)compute_subsidies(inst, IntegralAllocation{{0, IntegralAllocation::kUnassigned}}),
               std::invalid_argument);
  EXPECT_THROW((void)compute_subsidies(inst, IntegralAllocation{{0}}), std::invalid_argument);
  EXPECT_THROW((void)compute_subsidies(inst, IntegralAllocation{{0, 2}}), std::invalid_argument);
}

TEST(Model, GoodsSubsidyIsTheValueShortfall) {
  const Instance inst = make_instance(Kind::goods, {"1/2", "1/2"}, {{"1/2", "1"}, {"1", "1"}});
  const SubsidyVector s = compute_subsidies(inst, IntegralAllocation{{1, 1}});
  EXPECT_EQ(s.per_agent[0], Rational(3, 4));
  EXPECT_EQ(s.per_agent[1], Rational(0));
}

// Subsidies are valid and pointwise minimal for random allocations.
TEST(Model, SubsidiesAreFeasibleAndMinimal) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = fairdiv::testing::suite_instance(seed, seed % 2 ? Kind::goods : Kind::chores);
    IntegralAllocation alloc;
    for (ItemId e = 0; e < inst.items(); ++e) alloc.owner.push_back(rng() % inst.agents());
    const SubsidyVector s = compute_subsidies(inst, alloc);
    ASSERT_TRUE(satisfies_wprops(inst, alloc, s.per_agent));
    EXPECT_EQ(s.total, fairdiv::testing::total_subsidy_direct(inst, alloc.owner));
    for (AgentId i = 0; i < inst.agents(); ++i) {
      ASSERT_GE(s.per_agent[i], Rational(0));
      if (s.per_agent[i].is_zero()) continue;
      auto lowered = s.per_agent;
      lowered[i] -= min(s.per_agent[i], Rational(1, 1000000));
      EXPECT_FALSE(satisfies_wprops(inst, alloc, lowered));
    }
  }
}

TEST(Model, ValidationAcceptsTheSixAgentExample) {
  const ValidationReport r = validate_instance(six_agent_instance());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.degenerate_agents.empty());
}

TEST(Model, ValidationReportsViolations) {
  const auto bad_weights = validate_instance(make_instance(Kind::chores, {"1/2", "1/3"}, {{"1"}, {"1"}}));
  ASSERT_FALSE(bad_weights.ok());
  EXPECT_NE(bad_weights.violations.front().find("weights sum to 5/6"), std::string::npos);

  const auto big_cost = validate_instance(make_instance(Kind::chores, {"1/2", "1/2"}, {{"3/2"}, {"1"}}));
  ASSERT_FALSE(big_cost.ok());
  EXPECT_NE(big_cost.violations.front().find("exceeds 1"), std::string::npos);

  const auto negative = validate_instance(make_instance(Kind::chores, {"1"}, {{"-1/2"}}));
  EXPECT_FALSE(negative.ok());

  const auto zero_weight = validate_instance(make_instance(Kind::chores, {"0", "1"}, {{"1"}, {"1"}}));
  EXPECT_FALSE(zero_weight.ok());

  Instance ragged = make_instance(Kind::chores, {"1/2", "1/2"}, {{"1", "1"}, {"1"}});
  EXPECT_FALSE(validate_instance(ragged).ok());

  Instance empty;
  EXPECT_FALSE(validate_instance(empty).ok());
}

TEST(Model, ValidationFlagsDegenerateAgents) {
  const auto r = validate_instance(make_instance(Kind::chores, {"1/2", "1/2"}, {{"0", "0"}, {"1", "1"}}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.degenerate_agents, std::vector<AgentId>{0});
}

TEST(InstanceIo, RoundTripsTheSixAgentExample) {
  const Instance inst = six_agent_instance();
  const std::string text = serialize_instance(inst);
  EXPECT_EQ(parse_instance(text), inst);
  EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  EXPECT_NE(text.find("\"weights\": [\"1/12\", \"1/12\", \"1/12\", \"1/6\", \"1/4\", \"1/3\"]"), std::string::npos);
}

TEST(InstanceIo, RoundTripsRandomInstancesAndNames) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = fairdiv::testing::suite_instance(seed, seed % 2 ? Kind::goods : Kind::chores);
    if (seed % 3 == 0) {
      for (AgentId i = 0; i < inst.agents(); ++i) inst.agent_names.push_back("ag \"" + std::to_string(i) + "\"");
      for (ItemId e = 0; e < inst.items(); ++e) inst.item_names.push_back("item-" + std::to_string(e));
    }
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(InstanceIo, AcceptsDecimalsAndJsonNumbers) {
  const Instance inst = parse_instance(R"({"kind": "goods", "weights": [0.25, "3/4"],
    "costs": [["0.7", 1], [0.1, "1/3"]]})");
  EXPECT_EQ(inst.kind, Kind::goods);
  EXPECT_EQ(inst.weights[0], Rational(1, 4));
  EXPECT_EQ(inst.cost(0, 0), Rational(7, 10));
  EXPECT_EQ(inst.cost(0, 1), Rational(1));
  EXPECT_EQ(inst.cost(1, 0), Rational(1, 10));
  EXPECT_EQ(inst.cost(1, 1), Rational(1, 3));
}

TEST(InstanceIo, MalformedDocumentsReportALine) {
  try {
    (void)parse_instance("{\n  \"kind\": \"chores\",\n  \"weights\": [\"1\"\n  \"costs\": []\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 4u);
    EXPECT_EQ(std::string(err.what()).rfind("line 4:", 0), 0u);
  }
}

TEST(InstanceIo, StructuralErrors) {
  EXPECT_THROW((void)parse_instance(R"({"kind": "both", "weights": ["1"], "costs": [["1"]]})"), ParseError);
  EXPECT_THROW((void)parse_instance(R"({"kind": "chores", "weights": ["1"], "costs": [["x"]]})"), ParseError);
  EXPECT_THROW((void)parse_instance(R"({"kind": "chores", "weights": ["1", "0"], "costs": [["1"]]})"), ParseError);
  EXPECT_THROW((void)parse_instance(R"({"kind": "chores", "weights": ["1/2", "1/2"], "costs": [["1"], ["1", "1"]]})"),
               ParseError);
  EXPECT_THROW((void)parse_instance(R"({"kind": "chores", "weights": ["1"], "costs": [["1"]], "item_names": ["a", "b"]})"),
               ParseError);
  EXPECT_THROW((void)parse_instance(R"(["not an object"])"), ParseError);
  EXPECT_THROW((void)parse_instance(R"({"kind": "chores", "weights": [true], "costs": [["1"]]})"), ParseError);
}
