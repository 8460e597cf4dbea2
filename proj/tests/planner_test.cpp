#include <compograph/error.hpp>
#include <compograph/oracle.hpp>
#include <compograph/planner.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "weather_fixture.hpp"

namespace compograph {
namespace {

using testing::WeatherNodes;
using testing::weather_catalog;

using Services = std::vector<std::string>;

class WeatherPlannerTest : public ::testing::Test {
 protected:
  Catalog catalog = weather_catalog();
  CompositionModel model = build_model(catalog, "s1");
  Request request{{"city"}, {"longitude", "latitude", "weather"}};
  WeatherNodes w;

  std::size_t idx(const Node& n) const { return *model.index_of(n); }
};

TEST_F(WeatherPlannerTest, SeedsAtGoalCoveringNodes) {
  const auto seeds = seed_states(model, catalog, request);
  ASSERT_EQ(seeds.size(), 4u);
  std::vector<std::size_t> heads;
  for (const auto& s : seeds) heads.push_back(s.chain.front());
  EXPECT_EQ(heads, (std::vector{idx(w.s2a), idx(w.s2b), idx(w.s4), idx(w.s5b)}));
}

TEST_F(WeatherPlannerTest, SeedShrinksGoalByOwnOutputs) {
  const auto seeds = seed_states(model, catalog, request);
  const SearchState& at_s2a = seeds.front();
  EXPECT_EQ(at_s2a.chain, std::vector{idx(w.s2a)});
  EXPECT_EQ(at_s2a.remaining_required, TypeSet({"latitude", "longitude"}));
  EXPECT_EQ(at_s2a.remaining_services, (Services{"s1", "s3", "s4", "s5", "s6"}));
  // s5's own output is only zipcode, so the goal is untouched.
  EXPECT_EQ(seeds.back().remaining_required, request.required);
}

TEST_F(WeatherPlannerTest, NoSeedsForUnproducedType) {
  EXPECT_TRUE(seed_states(model, catalog, Request{{"city"}, {"road"}}).empty());
  EXPECT_THROW(seed_states(model, catalog, Request{{"city"}, {}}), Error);
}

TEST_F(WeatherPlannerTest, ExtendsBackwardAlongEdges) {
  const auto seeds = seed_states(model, catalog, request);
  auto from_s2a = extend_state(model, catalog, request, seeds[0]);
  ASSERT_EQ(from_s2a.size(), 1u);
  EXPECT_TRUE(from_s2a[0].is_goal());
  EXPECT_EQ(invocations(model, from_s2a[0]), (Services{"s1", "s2"}));

  auto from_s2b = extend_state(model, catalog, request, seeds[1]);
  ASSERT_EQ(from_s2b.size(), 1u);
  EXPECT_EQ(from_s2b[0].chain, (std::vector{idx(w.s5a), idx(w.s2b)}));
  auto done = extend_state(model, catalog, request, from_s2b[0]);
  ASSERT_EQ(done.size(), 1u);
  EXPECT_EQ(invocations(model, done[0]), (Services{"s1", "s5", "s2"}));

  auto from_s5b = extend_state(model, catalog, request, seeds[3]);
  ASSERT_EQ(from_s5b.size(), 1u);
  EXPECT_EQ(from_s5b[0].chain.front(), idx(w.s2a));
  done = extend_state(model, catalog, request, from_s5b[0]);
  ASSERT_EQ(done.size(), 1u);
  EXPECT_EQ(invocations(model, done[0]), (Services{"s1", "s2", "s5"}));
}

TEST_F(WeatherPlannerTest, FindsAllPlans) {
  const auto result = find_plans(model, catalog, request);
  std::vector<Services> got;
  for (const Plan& p : result.plans) got.push_back(p.services);
  EXPECT_EQ(got, (std::vector<Services>{
                     {"s1", "s2"}, {"s1", "s2", "s5"}, {"s1", "s5", "s2"}, {"s1", "s5", "s4"}}));
  EXPECT_EQ(result.stats.states, 12u);
  EXPECT_EQ(result.stats.solutions, 4u);
  EXPECT_EQ(result.plans[1].chain, (std::vector<Node>{w.s1, w.s2a, w.s5b}));
}

TEST_F(WeatherPlannerTest, EmptyGoalIsOneEmptyPlan) {
  const auto result = find_plans(model, catalog, Request{{"city"}, {}});
  ASSERT_EQ(result.plans.size(), 1u);
  EXPECT_TRUE(result.plans[0].services.empty());
  EXPECT_EQ(result.stats.states, 1u);
}

TEST_F(WeatherPlannerTest, UnreachableGoal) {
  const auto result = find_plans(model, catalog, Request{{"city"}, {"road"}});
  EXPECT_TRUE(result.plans.empty());
  EXPECT_EQ(result.stats.states, 1u);
}

TEST_F(WeatherPlannerTest, MaxPlansTruncates) {
  const auto one = find_plans(model, catalog, request, 1);
  ASSERT_EQ(one.plans.size(), 1u);
  EXPECT_EQ(one.stats.solutions, 1u);
  EXPECT_LT(one.stats.states, 12u);
  EXPECT_TRUE(find_plans(model, catalog, request, 0).plans.empty());
  EXPECT_EQ(find_plans(model, catalog, request, 10).plans.size(), 4u);
}

TEST_F(WeatherPlannerTest, RejectsForeignCatalog) {
  const Catalog other("other", {Service("a", {"x"}, {"y"})});
  try {
    find_plans(model, other, request);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::catalog_mismatch);
  }
}

TEST_F(WeatherPlannerTest, JsonOutput) {
  const std::string json = to_json(request, find_plans(model, catalog, request));
  EXPECT_EQ(json.rfind("{\n  \"request\": {\n    \"provided\": [\n      \"city\"\n    ],", 0), 0u);
  EXPECT_NE(json.find("\"states\": 12"), std::string::npos);
  EXPECT_NE(json.find("\"solutions\": 4"), std::string::npos);
}

// Checks every returned plan against the rule semantics, independently of
// how the search found it.
void expect_valid_plans(const CompositionModel& m, const Catalog& c, const Request& r,
                        const std::vector<Plan>& plans) {
  for (const Plan& p : plans) {
    ASSERT_EQ(p.services.size(), p.chain.size());
    ASSERT_FALSE(p.services.empty());
    EXPECT_EQ(std::set<std::string>(p.services.begin(), p.services.end()).size(), p.services.size());
    for (std::size_t i = 0; i < p.chain.size(); ++i) {
      EXPECT_EQ(p.chain[i].service, p.services[i]);
      EXPECT_TRUE(includes(r.provided, p.chain[i].cum_inputs));
      if (i + 1 < p.chain.size()) {
        EXPECT_TRUE(m.has_edge(*m.index_of(p.chain[i]), *m.index_of(p.chain[i + 1])));
      }
    }
    EXPECT_TRUE(includes(r.required, p.chain.back().cum_outputs));

    // Replay sink -> source: each node covers what is still missing.
    TypeSet remaining = r.required;
    for (std::size_t k = p.chain.size(); k-- > 0;) {
      EXPECT_FALSE(remaining.empty());
      EXPECT_TRUE(includes(remaining, p.chain[k].cum_outputs));
      remaining = remove(remaining, c.at(p.services[k]).outputs());
    }
    EXPECT_TRUE(remaining.empty());
  }
}

TEST(PlannerPropertyTest, PlansSatisfyRuleSemantics) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Catalog c = oracle::random_catalog(seed, 6, 6);
    const std::string init = c.services()[rng() % c.size()].name();
    const CompositionModel m = build_model(c, init);
    for (int q = 0; q < 4; ++q) {
      Request r{testing::random_subset(rng, 6), testing::random_subset(rng, 6)};
      if (r.required.empty()) continue;
      const auto result = find_plans(m, c, r);
      expect_valid_plans(m, c, r, result.plans);
      EXPECT_EQ(result.stats.solutions, result.plans.size());
      EXPECT_GE(result.stats.states, 1 + result.plans.size());

      // Same query twice: identical output.
      const auto again = find_plans(m, c, r);
      EXPECT_EQ(to_json(r, result), to_json(r, again));
    }
  }
}

}  // namespace
}  // namespace compograph
