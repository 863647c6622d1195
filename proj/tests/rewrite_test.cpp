#include <gtest/gtest.h>

#include "lambdacc/constants.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/syntax.hpp"

using namespace lambdacc;

namespace {

std::vector<std::pair<Rule, Path>> summary(const std::vector<RedexOccurrence>& rs) {
  std::vector<std::pair<Rule, Path>> out;
  for (const auto& r : rs) out.push_back({r.rule, r.path});
  return out;
}

}  // namespace

TEST(RootStep, BetaC) {
  EXPECT_EQ(*rootStep(Rule::BetaC, parseCom("(\\x.!x)!z")), parseCom("!z"));
  EXPECT_EQ(*rootStep(Rule::BetaC, namedConstants().DeltaBang), namedConstants().DeltaBang);
  EXPECT_FALSE(rootStep(Rule::BetaC, parseCom("(\\x.!x)(z!z)")));
}

TEST(RootStep, Sigma) {
  const Com mz = namedConstants().BlockedBetaMz;
  EXPECT_EQ(*rootStep(Rule::Sigma, mz), parseCom("(\\y.(\\x.x!x)!(\\x.x!x))(z!z)"));
  // the binder of the inner abstraction must not capture free names of N
  EXPECT_EQ(*rootStep(Rule::Sigma, parseCom("(\\y.y!y)((\\y.!y)(z!z))")), parseCom("(\\u.(\\y.y!y)!u)(z!z)"));
}

TEST(RootStep, IdAndIota) {
  EXPECT_EQ(*rootStep(Rule::Id, parseCom("(\\x.!x)(z!z)")), parseCom("z!z"));
  EXPECT_EQ(*rootStep(Rule::Id, parseCom("(\\x.!x)!z")), parseCom("!z"));
  EXPECT_FALSE(rootStep(Rule::Iota, parseCom("(\\x.!x)!z")));
  EXPECT_EQ(*rootStep(Rule::Iota, parseCom("(\\x.!x)(z!z)")), parseCom("z!z"));
  EXPECT_FALSE(rootStep(Rule::Id, parseCom("(\\x.!z)(z!z)")));
}

TEST(RootStep, Eta) {
  // \x.z!x contracts to z inside a return
  EXPECT_EQ(*rootStep(Rule::Eta, parseCom("!(\\x.z!x)")), parseCom("!z"));
  // x occurs in V: no contraction
  EXPECT_FALSE(rootStep(Rule::Eta, parseCom("!(\\x.x!x)")));
}

TEST(Paths, Classify) {
  EXPECT_EQ(classify({}), ClosureClass::Weak);
  EXPECT_EQ(classify({PathToken::AppArg, PathToken::AppArg}), ClosureClass::Weak);
  EXPECT_EQ(classify({PathToken::FunBody}), ClosureClass::Surface);
  EXPECT_EQ(classify({PathToken::AppArg, PathToken::RetBody}), ClosureClass::Full);
  EXPECT_TRUE(pathIn({PathToken::AppArg}, ClosureClass::Surface));
  EXPECT_FALSE(pathIn({PathToken::RetBody}, ClosureClass::Surface));
}

TEST(Redexes, VanOostrom) {
  const Com vo = namedConstants().VanOostrom;
  EXPECT_TRUE(enumerateRedexes(vo, ClosureClass::Weak, RuleSet::all()).empty());
  const auto surface = summary(enumerateRedexes(vo, ClosureClass::Surface, RuleSet::all()));
  const std::vector<std::pair<Rule, Path>> expected = {{Rule::BetaC, {PathToken::FunBody}},
                                                        {Rule::Id, {PathToken::FunBody}}};
  EXPECT_EQ(surface, expected);
}

TEST(Redexes, WeakTHasTwoWeakSigmaRedexes) {
  const auto rs = summary(enumerateRedexes(namedConstants().WeakT, ClosureClass::Weak, {Rule::Sigma}));
  const std::vector<std::pair<Rule, Path>> expected = {{Rule::Sigma, {}}, {Rule::Sigma, {PathToken::AppArg}}};
  EXPECT_EQ(rs, expected);
}

TEST(Redexes, LeftmostOutermostOrder) {
  // (\x.(\y.!y)!x)((\u.!u)!z): root beta_c fails (argument not a return)
  const Com t = parseCom("(\\x.(\\y.!y)!x)((\\u.!u)!z)");
  const auto rs = summary(enumerateRedexes(t, ClosureClass::Full, RuleSet::core()));
  const std::vector<std::pair<Rule, Path>> expected = {
      {Rule::Sigma, {}},
      {Rule::BetaC, {PathToken::FunBody}},
      {Rule::Id, {PathToken::FunBody}},
      {Rule::BetaC, {PathToken::AppArg}},
      {Rule::Id, {PathToken::AppArg}},
  };
  EXPECT_EQ(rs, expected);
}

TEST(Apply, VanOostromSteps) {
  const Com vo = namedConstants().VanOostrom;
  const Com first = applyRedex(vo, {{PathToken::FunBody}, Rule::Id});
  EXPECT_EQ(first, parseCom("(\\y.!y)(z!z)"));
  EXPECT_EQ(applyRedex(first, {{}, Rule::Id}), parseCom("z!z"));
  EXPECT_EQ(applyRedex(namedConstants().DeltaBang, {{}, Rule::BetaC}), namedConstants().DeltaBang);
}

TEST(Apply, InvalidOccurrenceThrows) {
  EXPECT_THROW(applyRedex(parseCom("z!z"), {{}, Rule::BetaC}), InvalidOccurrence);
  EXPECT_THROW(applyRedex(parseCom("z!z"), {{PathToken::FunBody}, Rule::BetaC}), InvalidOccurrence);
}

TEST(Normal, Forms) {
  EXPECT_TRUE(isNormal(parseCom("z!z"), ClosureClass::Full, RuleSet::all()));
  EXPECT_TRUE(isNormal(namedConstants().BlockedBetaMz, ClosureClass::Full, {Rule::BetaC}));
  EXPECT_FALSE(isNormal(namedConstants().BlockedBetaMz, ClosureClass::Full, {Rule::BetaC, Rule::Sigma}));
}

TEST(Rules, Names) {
  for (Rule r : kAllRules) EXPECT_EQ(*ruleFromName(ruleName(r)), r);
  EXPECT_EQ(*ruleFromName("beta"), Rule::BetaC);
  EXPECT_FALSE(ruleFromName("alpha"));
  EXPECT_TRUE(RuleSet::core().has(Rule::Id));
  EXPECT_FALSE(RuleSet::core().has(Rule::Iota));
}
