#include <compograph/error.hpp>
#include <compograph/oracle.hpp>

#include <gtest/gtest.h>

#include "weather_fixture.hpp"

namespace compograph {
namespace {

using testing::weather_catalog;
using Services = std::vector<std::string>;

TEST(BruteForceTest, WeatherMatchesPlanner) {
  const Catalog c = weather_catalog();
  const CompositionModel m = build_model(c, "s1");
  const Request r{{"city"}, {"longitude", "latitude", "weather"}};
  const auto brute = oracle::enumerate_plans_bruteforce(m, c, r);
  ASSERT_EQ(brute.size(), 4u);
  EXPECT_EQ(brute[0].services, (Services{"s1", "s2"}));
  EXPECT_TRUE(oracle::compare_plan_sets(find_plans(m, c, r).plans, brute).empty());
}

TEST(BruteForceTest, DegenerateGoals) {
  const Catalog c = weather_catalog();
  const CompositionModel m = build_model(c, "s1");
  const auto empty_goal = oracle::enumerate_plans_bruteforce(m, c, Request{{"city"}, {}});
  ASSERT_EQ(empty_goal.size(), 1u);
  EXPECT_TRUE(empty_goal[0].services.empty());
  EXPECT_TRUE(oracle::enumerate_plans_bruteforce(m, c, Request{{"city"}, {"road"}}).empty());
}

TEST(CompareTest, ReportsBothSides) {
  const Catalog c = weather_catalog();
  const CompositionModel m = build_model(c, "s1");
  const Request r{{"city"}, {"longitude", "latitude", "weather"}};
  auto planner = find_plans(m, c, r).plans;
  const Plan dropped = planner.back();
  planner.pop_back();
  const auto diff = oracle::compare_plan_sets(planner, oracle::enumerate_plans_bruteforce(m, c, r));
  EXPECT_TRUE(diff.only_in_planner.empty());
  ASSERT_EQ(diff.only_in_oracle.size(), 1u);
  EXPECT_EQ(diff.only_in_oracle[0], dropped);
}

TEST(ExecutabilityTest, WeatherPlans) {
  const Catalog c = weather_catalog();
  const TypeSet city{"city"};

  const auto ok = oracle::forward_executability(Services{"s1", "s2"}, c, city);
  EXPECT_TRUE(ok.executable());
  EXPECT_EQ(ok.missing, (std::vector<TypeSet>{{}, {}}));

  const auto blocked = oracle::forward_executability(Services{"s1", "s5", "s2"}, c, city);
  EXPECT_FALSE(blocked.executable());
  EXPECT_EQ(blocked.missing, (std::vector<TypeSet>{{}, {"road"}, {}}));

  EXPECT_TRUE(oracle::forward_executability(Services{}, c, {}).executable());
  EXPECT_THROW(oracle::forward_executability(Services{"nope"}, c, city), Error);
}

TEST(ExecutabilityTest, PaperPlansNeedNotBeExecutable) {
  const Catalog c = weather_catalog();
  const CompositionModel m = build_model(c, "s1");
  const Request r{{"city"}, {"longitude", "latitude", "weather"}};
  std::size_t executable = 0;
  for (const Plan& p : find_plans(m, c, r).plans) {
    const bool uses_s5 = std::find(p.services.begin(), p.services.end(), "s5") != p.services.end();
    const auto report = oracle::forward_executability(p.services, c, r.provided);
    EXPECT_EQ(report.executable(), !uses_s5);
    executable += report.executable();
  }
  EXPECT_EQ(executable, 1u);
}

TEST(RandomCatalogTest, Deterministic) {
  EXPECT_EQ(oracle::random_catalog(7, 5, 6), oracle::random_catalog(7, 5, 6));
  EXPECT_NE(oracle::random_catalog(7, 5, 6), oracle::random_catalog(8, 5, 6));
}

TEST(RandomCatalogTest, RespectsBounds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Catalog c = oracle::random_catalog(seed, 6, 4);
    ASSERT_EQ(c.size(), 6u);
    for (const Service& s : c) {
      EXPECT_GE(s.inputs().size(), 1u);
      EXPECT_LE(s.inputs().size(), 3u);
      EXPECT_GE(s.outputs().size(), 1u);
      EXPECT_LE(s.outputs().size(), 3u);
    }
  }
  const Catalog tiny = oracle::random_catalog(1, 1, 1);
  EXPECT_EQ(tiny.services()[0].inputs(), TypeSet({"t1"}));
  EXPECT_THROW(oracle::random_catalog(1, 0, 3), std::invalid_argument);
}

TEST(OraclePropertyTest, PlannerEqualsBruteForce) {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Catalog c = oracle::random_catalog(seed, 1 + seed % 6, 1 + (seed / 6) % 6);
    for (const Service& init : c) {
      const CompositionModel m = build_model(c, init.name());
      for (int q = 0; q < 3; ++q) {
        const Request r{testing::random_subset(rng, 6), testing::random_subset(rng, 6)};
        const auto planned = find_plans(m, c, r).plans;
        const auto brute = oracle::enumerate_plans_bruteforce(m, c, r);
        EXPECT_TRUE(oracle::compare_plan_sets(planned, brute).empty())
            << "seed " << seed << " init " << init.name();
      }
    }
  }
}

}  // namespace
}  // namespace compograph
