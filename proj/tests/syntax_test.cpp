#include <gtest/gtest.h>

#include "lambdacc/constants.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/syntax.hpp"

using namespace lambdacc;

TEST(Parse, CoreTerms) {
  EXPECT_EQ(parseCom("(\\x.!x)(z!z)"), app(lam("x", ret(var("x"))), app(var("z"), ret(var("z")))));
  EXPECT_EQ(parseCom("(\\y.(\\x.!x)!y)(z!z)"), namedConstants().VanOostrom);
  EXPECT_EQ(parseCom("(λy.(λx.!x)!y)(z!z)"), namedConstants().VanOostrom);
  EXPECT_EQ(parseCom("  ( \\y . (\\x.!x) ! y ) ( z ! z ) "), namedConstants().VanOostrom);
}

TEST(Parse, ValueIsNotAComputation) {
  EXPECT_THROW(parseCom("\\y.(\\x.!x)!y"), ParseError);
  EXPECT_THROW(parseCom("z"), ParseError);
}

TEST(Parse, Errors) {
  try {
    parseCom("(\\x.!x");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.describe().empty());
    EXPECT_TRUE(e.expected().count(")") == 1);
  }
  EXPECT_THROW(parseCom("!z extra"), ParseError);
  EXPECT_THROW(parseCom(""), ParseError);
  EXPECT_THROW(parseCom("!#"), ParseError);
}

TEST(Print, CoreTerms) {
  EXPECT_EQ(printCom(ret(lam("x", app(var("x"), ret(var("x")))))), "!(\\x.x!x)");
  EXPECT_EQ(printCom(namedConstants().BlockedBetaMz), "(\\x.x!x)((\\y.!(\\x.x!x))(z!z))");
  EXPECT_EQ(printCom(app(var("z"), ret(var("z")))), "z!z");
  EXPECT_EQ(printCom(namedConstants().VanOostrom), "(\\y.(\\x.!x)!y)(z!z)");
  EXPECT_EQ(printCom(namedConstants().SigmaIdOverlap), "(\\y.z!z)((\\x.!x)(z!z))");
}

TEST(Print, RoundTripsThroughParse) {
  const auto& c = namedConstants();
  for (const Com& t : {c.VanOostrom, c.WeakT, c.BlockedBetaMz, c.SigmaIdOverlap, c.DeltaBang}) {
    EXPECT_EQ(parseCom(printCom(t)), t);
    EXPECT_EQ(printCom(parseCom(printCom(t))), printCom(t));
  }
}

TEST(Ml, ParseAndPrint) {
  using named::Tree;
  const MlTerm p = parseMl("let x = [z] in [x]");
  EXPECT_EQ(p, MlTerm(Tree::let("x", Tree::unit(Tree::var("z")), Tree::unit(Tree::var("x")))));
  EXPECT_EQ(printMl(parseMl("(\\x.[x]) z")), "(\\x.[x]) z");
  const MlTerm m = parseMl("let y = z z in let x = [y] in [x]");
  EXPECT_EQ(printMl(m), "let y = z z in let x = [y] in [x]");
  EXPECT_EQ(printMl(parseMl("let z = (let x = z z in z z) in z z")), "let z = (let x = z z in z z) in z z");
  EXPECT_THROW(parseMl("z"), ParseError);
}

TEST(Star, ParseAndPrint) {
  const StarTerm s = parseStar("unit z * z * (\\y.unit y * (\\x.unit x))");
  EXPECT_EQ(printStar(s), "unit z * z * (\\y.unit y * (\\x.unit x))");
}

TEST(Cbv, ParseAndPrint) {
  EXPECT_EQ(printCbv(parseCbv("((\\x.x) (\\y.y)) z")), "(\\x.x) (\\y.y) z");
  EXPECT_EQ(printCbv(parseCbv("z (z z)")), "z (z z)");
}

TEST(Trace, ExportEmpty) {
  const Trace t(ret(var("z")));
  EXPECT_EQ(exportTrace(t),
            "{\"schema\":1,\"initial\":\"!z\",\"steps\":[],\"counts\":{\"beta_c\":0,\"sigma\":0,\"id\":0,\"iota\":0},"
            "\"status\":\"normal_form\"}");
}

TEST(Trace, ExportVanOostrom) {
  const Outcome o = leftmost(namedConstants().VanOostrom, ClosureClass::Full, RuleSet::core(), Fuel{1000});
  const auto j = nlohmann::json::parse(exportTrace(o.trace));
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["rule"], "beta_c");
  EXPECT_EQ(j["steps"][1]["rule"], "id");
  EXPECT_EQ(j["steps"][0]["path"], nlohmann::json::array({"fun_body"}));
  EXPECT_EQ(j["steps"][1]["result"], "z!z");
  EXPECT_EQ(j["counts"]["beta_c"], o.trace.betaCount());
  EXPECT_EQ(j["status"], "normal_form");
}
