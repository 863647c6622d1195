#include <gtest/gtest.h>

#include "lambdacc/properties.hpp"

using namespace lambdacc;

// The full suites run in the acceptance binary; here a smaller universe
// exercises every check and the job-count determinism.

namespace {

LabConfig smallConfig(std::size_t jobs = 1) {
  LabConfig cfg;
  cfg.universe = UniverseSpec{7, 5, "z"};
  cfg.jobs = jobs;
  cfg.seeds = 5;
  return cfg;
}

void expectAllOk(const std::vector<ars::CheckReport>& reports) {
  for (const auto& r : reports) EXPECT_TRUE(r.ok()) << r.toJson().dump(2);
}

}  // namespace

TEST(Properties, EveryNameRuns) {
  const LabConfig cfg = smallConfig();
  const auto u = buildUniverse(cfg.universe);
  for (const auto& name : propertyNames()) {
    const auto reports = runProperty(name, u, cfg);
    ASSERT_TRUE(reports) << name;
    EXPECT_FALSE(reports->empty()) << name;
    expectAllOk(*reports);
  }
  EXPECT_FALSE(runProperty("no-such-property", u, cfg));
}

TEST(Properties, WeakFactorizationWitnessIsVanOostrom) {
  const LabConfig cfg = smallConfig();
  const auto r = checkWeakFactorizationCore(buildUniverse(cfg.universe), cfg);
  EXPECT_TRUE(r.expectFailure);
  EXPECT_EQ(r.verdict(), ars::Verdict::Fail);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].terms, (std::vector<std::string>{"(\\y.(\\x.!x)!y)(z!z)", "z!z"}));
}

TEST(Properties, SigmaIdWitnessIsTheOverlap) {
  const LabConfig cfg = smallConfig();
  for (const auto& r : checkConfluenceMatrix(buildUniverse(cfg.universe), cfg)) {
    if (!r.expectFailure || r.property.find("sigma + id") == std::string::npos) continue;
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses[0].terms[0], "(\\y.z!z)((\\x.!x)(z!z))");
  }
}

TEST(Properties, DeterministicAcrossJobs) {
  const auto u = buildUniverse(smallConfig().universe);
  const auto a = checkUniformNormalization(u, smallConfig(1));
  const auto b = checkUniformNormalization(u, smallConfig(3));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].toJson(), b[i].toJson());
}

TEST(Properties, BetaCountStats) {
  const auto s = betaCountStats(parseCom("!z"), ClosureClass::Surface, 5, Fuel{100});
  EXPECT_EQ(s.terminated, 5u);
  EXPECT_EQ(s.betaCounts, std::set<std::size_t>{0});
  EXPECT_EQ(s.distinctFinals(), 1u);
  const auto w = betaCountStats(namedConstants().WeakT, ClosureClass::Weak, 20, Fuel{100});
  EXPECT_EQ(w.terminated, 20u);
  EXPECT_EQ(w.betaCounts, std::set<std::size_t>{0});
  EXPECT_EQ(w.distinctFinals(), 2u);
}
