#include <gtest/gtest.h>

#include "lambdacc/gallery.hpp"

using namespace lambdacc;

TEST(Gallery, EveryScenarioMatchesItsExpectation) {
  const auto reports = galleryRun();
  ASSERT_EQ(reports.size(), galleryScenarios().size());
  for (const auto& r : reports) EXPECT_TRUE(r.ok()) << r.toJson().dump(2);
}

TEST(Gallery, ExpectedFailuresAreCounterexamples) {
  std::size_t expectedFailures = 0;
  for (const auto& r : galleryRun()) {
    if (!r.expectFailure) continue;
    ++expectedFailures;
    EXPECT_EQ(r.verdict(), ars::Verdict::Fail) << r.property;
    EXPECT_FALSE(r.witnesses.empty()) << r.property;
  }
  EXPECT_EQ(expectedFailures, 2u);
}
