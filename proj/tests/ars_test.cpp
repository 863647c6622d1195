#include <gtest/gtest.h>

#include <string>

#include "lambdacc/ars.hpp"
#include "lambdacc/constants.hpp"
#include "lambdacc/steps.hpp"
#include "lambdacc/syntax.hpp"

using namespace lambdacc;
using ars::Bounds;
using ars::CheckReport;
using ars::StepFn;
using ars::Verdict;

namespace {

// Small integer systems: each number lists its successors.
StepFn<int, char> table(std::map<int, std::vector<int>> edges, char label = 'a') {
  return [edges = std::move(edges), label](const int& n) {
    std::vector<ars::Transition<int, char>> out;
    if (auto it = edges.find(n); it != edges.end())
      for (int m : it->second) out.push_back({label, m});
    return out;
  };
}

const ars::Printer<int> show = [](const int& n) { return std::to_string(n); };

}  // namespace

TEST(Graph, Reachable) {
  const auto g = ars::reachable(1, table({{1, {2, 3}}, {2, {4}}, {3, {4}}}), {5, 100});
  EXPECT_EQ(g.size(), 4u);
  EXPECT_FALSE(g.truncated());
  ASSERT_EQ(g.normalForms().size(), 1u);
  EXPECT_EQ(g.node(g.normalForms()[0]), 4);
}

TEST(Graph, Truncation) {
  const auto g = ars::reachable(0, table({{0, {1}}, {1, {2}}, {2, {3}}}), {2, 100});
  EXPECT_TRUE(g.truncated());
  EXPECT_FALSE(g.contains(3));
  const auto capped = ars::reachable(1, table({{1, {2, 3, 4}}}), {5, 2});
  EXPECT_TRUE(capped.truncated());
}

TEST(Graph, CoreTerms) {
  const ComStep full = comStep(ClosureClass::Full, RuleSet::core());
  EXPECT_EQ(ars::reachable(parseCom("!z"), full, {5, 100}).size(), 1u);
  EXPECT_TRUE(ars::reachable(namedConstants().VanOostrom, full, {3, 100}).contains(parseCom("z!z")));
  const auto loop = ars::reachable(namedConstants().DeltaBang, comStep(ClosureClass::Full, {Rule::BetaC}), {3, 100});
  EXPECT_EQ(loop.size(), 1u);
  ASSERT_EQ(loop.edges(0).size(), 1u);
  EXPECT_EQ(loop.edges(0)[0].to, 0u);
}

TEST(Checks, Factorization) {
  // e: 1 -> 2; i: 1 -> 3 -> 4 and 2 -> 4: every endpoint reorders
  CheckReport ok;
  ars::checkFactorization<int, char>(1, table({{1, {2}}}), table({{1, {3}}, {3, {4}}, {2, {4}}}), 3, {5, 100},
                                     {5, 100}, show, ok);
  EXPECT_EQ(ok.verdict(), Verdict::Pass);
  // i then e with no e-first route
  CheckReport bad;
  ars::checkFactorization<int, char>(1, table({{2, {3}}}), table({{1, {2}}}), 3, {5, 100}, {5, 100}, show, bad);
  EXPECT_EQ(bad.verdict(), Verdict::Fail);
  ASSERT_FALSE(bad.witnesses.empty());
  EXPECT_EQ(bad.witnesses[0].terms, (std::vector<std::string>{"1", "3"}));
  // trivial pass when i is empty
  CheckReport trivial;
  ars::checkFactorization<int, char>(1, table({{1, {2}}}), table({}), 3, {5, 100}, {5, 100}, show, trivial);
  EXPECT_EQ(trivial.verdict(), Verdict::Pass);
}

TEST(Checks, LocalConfluence) {
  CheckReport diamond;
  ars::checkLocalConfluence<int, char>(1, table({{1, {2, 3}}, {2, {4}}, {3, {4}}}), {4, 100}, show, diamond);
  EXPECT_EQ(diamond.verdict(), Verdict::Pass);
  CheckReport split;
  ars::checkLocalConfluence<int, char>(1, table({{1, {2, 3}}}), {4, 100}, show, split);
  EXPECT_EQ(split.verdict(), Verdict::Fail);
  CheckReport far;
  ars::checkLocalConfluence<int, char>(1, table({{1, {2, 3}}, {2, {5}}, {5, {6}}, {6, {7}}, {3, {7}}}), {1, 100},
                                       show, far);
  EXPECT_EQ(far.verdict(), Verdict::Unknown);
}

TEST(Checks, QuasiDiamondAndCommutation) {
  CheckReport q;
  ars::checkQuasiDiamond<int, char>(1, table({{1, {2, 3}}, {2, {4}}, {3, {4}}}), show, q);
  EXPECT_EQ(q.verdict(), Verdict::Pass);
  CheckReport c;
  ars::checkCommutation<int, char>(1, table({{1, {2}}, {3, {4}}}), table({{1, {3}}, {2, {4}}}), {3, 100}, show, c);
  EXPECT_EQ(c.verdict(), Verdict::Pass);
}

TEST(Checks, StrongPostponement) {
  CheckReport r;
  ars::checkStrongPostponement<int, char>(1, table({{1, {5}}, {2, {3}}}), table({{1, {2}}, {5, {3}}}), {3, 100},
                                          show, r);
  EXPECT_EQ(r.verdict(), Verdict::Pass);
}

TEST(Report, ExpectedFailure) {
  CheckReport r;
  r.expectFailure = true;
  r.pass();
  EXPECT_FALSE(r.ok());
  r.fail({"found", {"t"}});
  EXPECT_TRUE(r.ok());
  const auto j = r.toJson();
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["expected"], "fail");
  EXPECT_EQ(j["ok"], true);
}

TEST(Report, UnknownRateAndMerge) {
  CheckReport a, b;
  a.pass();
  a.undecided();
  b.pass();
  b.pass();
  a.merge(b);
  EXPECT_EQ(a.instances, 4u);
  EXPECT_DOUBLE_EQ(a.unknownRate(), 0.25);
  EXPECT_EQ(a.verdict(), Verdict::Unknown);
  EXPECT_TRUE(a.ok());
}

TEST(Parallel, OrderIndependentOfJobs) {
  auto square = [](std::size_t i) { return static_cast<int>(i * i); };
  EXPECT_EQ(ars::parallelMap<int>(50, 1, square), ars::parallelMap<int>(50, 4, square));
}
