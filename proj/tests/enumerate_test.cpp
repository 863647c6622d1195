#include <gtest/gtest.h>

#include <unordered_set>

#include "lambdacc/enumerate.hpp"
#include "lambdacc/syntax.hpp"

using namespace lambdacc;

TEST(Enumerate, Smallest) {
  const auto one = enumerateTerms(1, {"z"}, false);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], parseCom("!z"));
  EXPECT_TRUE(enumerateTerms(1, {}, true).empty());
  const auto two = enumerateTerms(2, {}, true);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], parseCom("!(\\x.!x)"));
}

TEST(Enumerate, ClosedCounts) {
  const std::size_t expected[] = {0, 1, 3, 7, 20, 61, 186, 603, 2056};
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(enumerateTerms(n, {}, true).size(), expected[n - 1]) << n;
}

TEST(Enumerate, OpenCounts) {
  const std::size_t expected[] = {1, 3, 7, 19, 56, 169, 545};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerateTerms(n, {"z"}, false).size(), expected[n - 1]) << n;
}

TEST(Enumerate, DefaultUniverse) {
  const auto u = buildUniverse();
  EXPECT_EQ(u.size(), 2056u + 545u - 186u);
  std::unordered_set<Com> distinct(u.begin(), u.end());
  EXPECT_EQ(distinct.size(), u.size());
  for (std::size_t i = 0; i < 2056; ++i) EXPECT_TRUE(isClosed(u[i]));
  for (std::size_t i = 2056; i < u.size(); ++i) EXPECT_EQ(freeVars(u[i]), std::set<std::string>{"z"});
}

TEST(Enumerate, PrefixStable) {
  const auto a = enumerateTerms(6, {"z"}, false);
  const auto b = enumerateTerms(7, {"z"}, false);
  ASSERT_LE(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Enumerate, NodeCount) {
  EXPECT_EQ(nodeCount(parseCom("!z")), 1u);
  EXPECT_EQ(nodeCount(parseCom("z!z")), 3u);
  EXPECT_EQ(nodeCount(parseCom("(\\y.(\\x.!x)!y)(z!z)")), 9u);
  for (const Com& t : enumerateTerms(5, {"z"}, false)) EXPECT_LE(nodeCount(t), 5u);
}

TEST(Enumerate, SiblingCalculi) {
  EXPECT_EQ(enumerateMl(6, {"z"}).size(), 550u);
  EXPECT_EQ(enumerateCbv(8, {"z"}).size(), 2411u);
  for (const auto& p : enumerateMl(4, {"z"})) EXPECT_TRUE(sorts::mlComputation(p.tree));
  for (const auto& p : enumerateCbv(4, {"z"})) EXPECT_TRUE(sorts::cbvTerm(p.tree));
}
