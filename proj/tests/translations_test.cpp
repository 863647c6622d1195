#include <gtest/gtest.h>

#include "lambdacc/constants.hpp"
#include "lambdacc/syntax.hpp"
#include "lambdacc/translations.hpp"

using namespace lambdacc;

TEST(Ml, ToCore) {
  EXPECT_EQ(mlToCc(parseMl("[z]")), parseCom("!z"));
  EXPECT_EQ(mlToCc(parseMl("let x = z z in [x]")), parseCom("(\\x.!x)(z!z)"));
  EXPECT_EQ(mlToCc(parseMl("let x = [z] in z x")), parseCom("(\\x.z!x)!z"));
}

TEST(Ml, FromCore) {
  EXPECT_EQ(printMl(ccToMl(parseCom("x(z!z)"))), "let y = z z in x y");
  EXPECT_EQ(printMl(ccToMl(parseCom("z!z"))), "z z");
  EXPECT_EQ(printMl(ccToMl(namedConstants().VanOostrom)), "let y = z z in (\\x.[x]) y");
  // the fresh name avoids the free variables of the argument
  EXPECT_EQ(printMl(ccToMl(parseCom("z(y!y)"))), "let y1 = y y in z y1");
}

TEST(Ml, Steps) {
  const auto steps = mlStep(parseMl("let x = [z] in [x]"), MlClosure::Full);
  bool found = false;
  for (const auto& [rule, p] : steps) found = found || (rule == MlRule::LetBeta && p == parseMl("[z]"));
  EXPECT_TRUE(found);
  EXPECT_TRUE(mlStep(parseMl("[z]"), MlClosure::Full).empty());
}

TEST(Ml, SequencingIsNotConfluent) {
  const auto steps = mlStep(parseMl("let z = (let x = (let y = z z in z z) in z z) in z z"), MlClosure::LetEval);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].first, MlRule::LetAss);
  EXPECT_EQ(steps[1].first, MlRule::LetAss);
  EXPECT_EQ(printMl(steps[0].second), "let x = (let y = z z in z z) in let z = z z in z z");
  EXPECT_EQ(printMl(steps[1].second), "let z = (let y = z z in let x = z z in z z) in z z");
}

TEST(Star, RoundTripAndShape) {
  const Com vo = namedConstants().VanOostrom;
  const StarTerm s = ccToStar(vo);
  EXPECT_EQ(printStar(s), "unit z * z * (\\y.unit y * (\\x.unit x))");
  EXPECT_EQ(starToCc(s), vo);
  EXPECT_TRUE(sorts::starComputation(s.tree));
}

TEST(Star, BetaCCorresponds) {
  const auto steps = starStep(ccToStar(parseCom("(\\x.!x)!z")), {Rule::BetaC});
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(starToCc(steps[0].second), parseCom("!z"));
}

TEST(Kernel, ForgetsReturns) {
  EXPECT_EQ(printCbv(ccToKernel(parseCom("!(\\x.!x)"))), "\\x.x");
  EXPECT_EQ(kernelToCc(parseCbv("x")), ret(var("x")));
  EXPECT_EQ(printCbv(ccToKernel(namedConstants().VanOostrom)), "(\\y.(\\x.x) y) (z z)");
  EXPECT_EQ(kernelToCc(ccToKernel(namedConstants().WeakT)), namedConstants().WeakT);
  // an application in function position is not a kernel term
  EXPECT_THROW(kernelToCc(parseCbv("(z z) z")), std::invalid_argument);
}

TEST(Kernel, BetaV) {
  const auto s = betaVStep(parseCbv("(\\x.x) z"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(printCbv(s[0]), "z");
  EXPECT_TRUE(betaVStep(parseCbv("(\\x.x) (z z)")).empty());
}

TEST(Embed, Clauses) {
  EXPECT_EQ(printCbv(cbvEmbed(parseCbv("(\\x.x) z"))), "(\\x.x) z");
  EXPECT_EQ(printCbv(cbvEmbed(parseCbv("((\\x.x)(\\y.y)) z"))), "(\\w.w z) ((\\x.x) (\\y.y))");
  EXPECT_EQ(printCbv(cbvEmbed(parseCbv("x"))), "x");
  EXPECT_TRUE(sorts::kernelComputation(cbvEmbed(parseCbv("(z z) (z z)")).tree));
}

TEST(Convertible, Basics) {
  const ars::Bounds b{6, 3000};
  const Com t = namedConstants().VanOostrom;
  EXPECT_EQ(boundedConvertible(t, t, RuleSet::core(), b), Truth::True);
  EXPECT_EQ(boundedConvertible(t, parseCom("z!z"), RuleSet::core(), b), Truth::True);
  EXPECT_EQ(boundedConvertible(parseCom("!z"), parseCom("z!z"), RuleSet::core(), b), Truth::False);
  const Com xm = parseCom("!(\\x.x(x!x))");
  EXPECT_NE(mlToCc(ccToMl(xm)), xm);
  EXPECT_EQ(boundedConvertible(xm, mlToCc(ccToMl(xm)), RuleSet::withEta(), b), Truth::True);
  const MlTerm p = parseMl("let y = z z in let x = [y] in [x]");
  EXPECT_EQ(boundedConvertible(p, parseMl("z z"), b), Truth::True);
}
