#include <gtest/gtest.h>

#include "crlab/paperlab.hpp"

using namespace crlab;

class Scenario : public ::testing::TestWithParam<std::string> {};

TEST_P(Scenario, EveryStepPasses) {
  Report r = run_scenario(GetParam());
  ASSERT_FALSE(r.steps.empty());
  for (const auto& s : r.steps)
    EXPECT_EQ(to_string(s.status), "PASS") << s.name << ": expected " << s.expected << ", got " << s.actual;
  EXPECT_LT(r.elapsed_ms, 5000.0);
}

INSTANTIATE_TEST_SUITE_P(All, Scenario, ::testing::ValuesIn(scenario_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& c : n)
                             if (c == '-') c = '_';
                           return n;
                         });

TEST(Paperlab, Registry) {
  EXPECT_EQ(scenario_names(), (std::vector<std::string>{"a2-conjugacy", "d4-gcr-not-gcrk", "d4-gir-not-gcr",
                                                        "d4-nonseparability", "w0-combinatorics"}));
  EXPECT_THROW(run_scenario("d4-unknown"), DomainError);
}

TEST(Paperlab, Deterministic) {
  for (const auto& n : scenario_names()) EXPECT_EQ(to_text(run_scenario(n)), to_text(run_scenario(n))) << n;
  ScenarioOptions other{7};
  EXPECT_EQ(run_scenario("d4-gcr-not-gcrk", other).find("collection confluence")->status, Status::Pass);
}

TEST(Paperlab, ConcurrentMatchesSequential) {
  auto names = scenario_names();
  std::reverse(names.begin(), names.end());
  auto par = run_scenarios(names);
  ASSERT_EQ(par.size(), names.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].scenario, scenario_names()[i]);
    EXPECT_EQ(to_text(par[i]), to_text(run_scenario(par[i].scenario)));
  }
}

TEST(Paperlab, JsonSchema) {
  auto j = to_json(run_scenario("w0-combinatorics"));
  for (const char* k : {"scenario", "steps", "pass", "elapsed_ms"}) EXPECT_TRUE(j.contains(k)) << k;
  for (const auto& s : j["steps"])
    for (const char* k : {"name", "anchor", "status", "expected", "actual"}) EXPECT_TRUE(s.contains(k)) << k;
}

TEST(Paperlab, LongestElementOnLabels) {
  auto sys = RootSystem::D4();
  RootMap w0 = weyl_word_map(sys, scenario_detail::d4_longest_word());
  EXPECT_EQ(w0, sys.minus_one());
  for (int l = 1; l <= 12; ++l) EXPECT_EQ(sys.label(w0.inverse()(sys.from_label(l))), -l);
}

TEST(Paperlab, CollectionOrderChangesTopCoefficient) {
  scenario_detail::D4Setup d;
  std::vector<Root> order;
  for (int l = 4; l <= 12; ++l) order.push_back(d.sys.from_label(l));
  auto fr = conjugate_generic(d.sys, generic_radical(d.sys, order, d.reg), d.w("n[a]*sigma*e12(s^2)"));
  EXPECT_EQ(fr.tail.coeff(d.sys.from_label(12)).to_string(),
            "x4*x10 + x4*x11 + x5*x7 + x5*x10 + x6^2 + x7*x11 + s^2");
  EXPECT_EQ(fr.tail.coeff(d.sys.from_label(7)).to_string(), "x4 + x7");
}
