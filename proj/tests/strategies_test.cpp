#include <gtest/gtest.h>

#include <cstdlib>

#include "lambdacc/constants.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/syntax.hpp"

using namespace lambdacc;

namespace {

const Fuel kFuel{1000};

std::vector<Rule> rules(const Trace& t) {
  std::vector<Rule> out;
  for (const auto& s : t.steps()) out.push_back(s.redex.rule);
  return out;
}

}  // namespace

TEST(WeakBetaC, Examples) {
  Outcome o = weakBetaC(parseCom("(\\x.!x)!z"), kFuel);
  EXPECT_EQ(o.status, Status::NormalForm);
  EXPECT_EQ(o.term, parseCom("!z"));
  EXPECT_EQ(o.trace.betaCount(), 1u);

  o = weakBetaC(namedConstants().DeltaBang, kFuel);
  EXPECT_EQ(o.status, Status::Cycle);
  EXPECT_EQ(o.term, namedConstants().DeltaBang);
  EXPECT_EQ(o.trace.size(), 1u);

  o = weakBetaC(namedConstants().VanOostrom, kFuel);
  EXPECT_EQ(o.status, Status::NormalForm);
  EXPECT_EQ(o.term, namedConstants().VanOostrom);
  EXPECT_EQ(o.trace.betaCount(), 0u);
}

TEST(RootEval, Examples) {
  Outcome o = rootEval(parseCom("(\\x.!x)((\\y.!y)!z)"), kFuel);
  EXPECT_EQ(o.status, Status::NormalForm);
  EXPECT_EQ(o.term, parseCom("!z"));
  EXPECT_EQ(rules(o.trace), (std::vector<Rule>{Rule::Sigma, Rule::BetaC, Rule::BetaC}));

  o = rootEval(parseCom("!(\\x.x!x)"), kFuel);
  EXPECT_EQ(o.status, Status::NormalForm);
  EXPECT_EQ(o.trace.size(), 0u);

  EXPECT_EQ(rootEval(namedConstants().DeltaBang, kFuel).status, Status::Cycle);
}

TEST(RandomMaximal, WeakTEndsInEitherNormalForm) {
  const Com m2 = parseCom("(\\y.(\\x.(\\z.z!z)(z!z))(z!z))(z!z)");
  const Com n2 = parseCom("(\\y.(\\z.z!z)((\\x.z!z)(z!z)))(z!z)");
  const Outcome a = randomMaximal(namedConstants().WeakT, ClosureClass::Weak, RuleSet::sigmaBetaC(), 1, kFuel);
  const Outcome b = randomMaximal(namedConstants().WeakT, ClosureClass::Weak, RuleSet::sigmaBetaC(), 2, kFuel);
  EXPECT_EQ(a.term, m2);
  EXPECT_EQ(b.term, n2);
  EXPECT_EQ(a.trace.betaCount(), b.trace.betaCount());
}

TEST(RandomMaximal, Deterministic) {
  const Com t = namedConstants().WeakT;
  for (std::uint64_t seed = 1; seed < 6; ++seed)
    EXPECT_EQ(exportTrace(randomMaximal(t, ClosureClass::Surface, RuleSet::core(), seed, kFuel).trace),
              exportTrace(randomMaximal(t, ClosureClass::Surface, RuleSet::core(), seed, kFuel).trace));
  const Outcome o = randomMaximal(parseCom("!z"), ClosureClass::Full, RuleSet::all(), 7, kFuel);
  EXPECT_TRUE(o.normal());
  EXPECT_EQ(o.trace.size(), 0u);
}

TEST(Iterated, BlockedBetaCycles) {
  const Outcome o = iteratedStrategy(namedConstants().BlockedBetaMz, ClosureClass::Surface, kFuel);
  EXPECT_EQ(o.status, Status::Cycle);
  EXPECT_EQ(rules(o.trace), (std::vector<Rule>{Rule::Sigma, Rule::BetaC}));
  EXPECT_EQ(o.term, parseCom("(\\y.(\\x.x!x)!(\\x.x!x))(z!z)"));
}

TEST(Iterated, DescendsUnderReturn) {
  const Outcome o = iteratedStrategy(parseCom("!(\\x.(\\y.!y)!x)"), ClosureClass::Weak, kFuel);
  EXPECT_TRUE(o.normal());
  EXPECT_EQ(o.term, parseCom("!(\\x.!x)"));
  ASSERT_EQ(o.trace.size(), 1u);
  EXPECT_EQ(o.trace.steps()[0].redex.path, Path{PathToken::RetBody});
}

TEST(Iterated, NormalTermTakesNoStep) {
  for (ClosureClass e : {ClosureClass::Weak, ClosureClass::Surface}) {
    const Outcome o = iteratedStrategy(parseCom("z!z"), e, kFuel);
    EXPECT_TRUE(o.normal());
    EXPECT_EQ(o.trace.size(), 0u);
  }
}

TEST(NormalizeFull, Examples) {
  Outcome o = normalizeFull(parseCom("(\\x.!x)(z!z)"), ClosureClass::Surface, kFuel);
  EXPECT_EQ(o.term, parseCom("z!z"));
  EXPECT_EQ(rules(o.trace), std::vector<Rule>{Rule::Iota});

  o = normalizeFull(namedConstants().VanOostrom, ClosureClass::Weak, kFuel);
  EXPECT_TRUE(o.normal());
  EXPECT_EQ(o.term, parseCom("z!z"));
  EXPECT_EQ(rules(o.trace), (std::vector<Rule>{Rule::BetaC, Rule::Iota}));

  EXPECT_EQ(normalizeFull(namedConstants().DeltaBang, ClosureClass::Surface, kFuel).status, Status::Cycle);
}

TEST(Halts, Examples) {
  EXPECT_EQ(halts(parseCom("!(\\x.!x)"), kFuel), Truth::True);
  EXPECT_EQ(halts(namedConstants().DeltaBang, kFuel), Truth::False);
  EXPECT_EQ(halts(namedConstants().BlockedBetaMz, kFuel), Truth::True);
}

TEST(Fuel, RunsOut) {
  // three beta_c steps, one step of fuel
  const Com t = parseCom("(\\x.(\\y.(\\u.!u)!y)!x)!z");
  const Outcome o = weakBetaC(t, Fuel{1});
  EXPECT_EQ(o.status, Status::FuelExhausted);
  EXPECT_EQ(o.trace.size(), 1u);
  EXPECT_EQ(halts(t, Fuel{1}), Truth::Unknown);
  EXPECT_EQ(halts(t, kFuel), Truth::True);
}

TEST(Fuel, FromEnvironment) {
  ::setenv("LAMBDACC_FUEL", "17", 1);
  EXPECT_EQ(Fuel::fromEnv().maxSteps, 17u);
  ::setenv("LAMBDACC_FUEL", "junk", 1);
  EXPECT_EQ(Fuel::fromEnv().maxSteps, 1000u);
  ::unsetenv("LAMBDACC_FUEL");
  EXPECT_EQ(Fuel::fromEnv().maxSteps, 1000u);
}
