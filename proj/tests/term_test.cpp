#include <gtest/gtest.h>

#include "lambdacc/constants.hpp"
#include "lambdacc/named.hpp"
#include "lambdacc/syntax.hpp"
#include "lambdacc/term.hpp"

using namespace lambdacc;

namespace {

const Val I = lam("x", ret(var("x")));
const Val Delta = lam("x", app(var("x"), ret(var("x"))));

}  // namespace

TEST(Term, AlphaEquivalentTermsCompareEqual) {
  EXPECT_EQ(ret(lam("x", ret(var("x")))), ret(lam("y", ret(var("y")))));
  EXPECT_NE(ret(var("z")), ret(var("w")));
  EXPECT_EQ(app(Delta, ret(Delta)), app(lam("q", app(var("q"), ret(var("q")))), ret(Delta)));
  EXPECT_EQ(std::hash<Com>{}(ret(lam("x", ret(var("x"))))), std::hash<Com>{}(ret(lam("y", ret(var("y"))))));
}

TEST(Term, BoundAndFreeOccurrencesDiffer) {
  // \x.!x and \x.!z
  EXPECT_NE(lam("x", ret(var("x"))), lam("x", ret(var("z"))));
  // \x.\y.!x and \x.\y.!y
  EXPECT_NE(lam("x", ret(lam("y", ret(var("x"))))), lam("x", ret(lam("y", ret(var("y"))))));
}

TEST(Term, FreeVars) {
  EXPECT_TRUE(freeVars(ret(I)).empty());
  EXPECT_EQ(freeVars(app(var("z"), ret(var("z")))), std::set<std::string>{"z"});
  EXPECT_EQ(freeVars(namedConstants().VanOostrom), std::set<std::string>{"z"});
  EXPECT_TRUE(isClosed(namedConstants().DeltaBang));
  EXPECT_FALSE(isClosed(namedConstants().WeakT));
}

TEST(Term, Substitute) {
  const Val idY = lam("y", ret(var("y")));
  EXPECT_EQ(substitute(ret(var("x")), "x", idY), ret(idY));
  EXPECT_EQ(substitute(ret(var("z")), "x", idY), ret(var("z")));
  const Val deltaY = lam("y", app(var("y"), ret(var("y"))));
  EXPECT_EQ(substitute(app(var("x"), ret(var("x"))), "x", deltaY), app(deltaY, ret(deltaY)));
  EXPECT_EQ(substitute(app(var("x"), ret(var("x"))), "x", deltaY), namedConstants().DeltaBang);
}

TEST(Term, SubstitutionAvoidsCapture) {
  // (\y.!x)[y/x] = \y'.!y, not \y.!y
  const Com body = ret(lam("y", ret(var("x"))));
  const Com out = substitute(body, "x", var("y"));
  EXPECT_EQ(out, ret(lam("u", ret(var("y")))));
  EXPECT_NE(out, ret(lam("u", ret(var("u")))));
  EXPECT_EQ(printCom(out), "!(\\y1.!y)");
}

TEST(Term, InstantiateIsBetaSubstitution) {
  // body of \x.x!x instantiated with I
  const Com body = Delta.body();
  EXPECT_EQ(instantiate(body, I), app(I, ret(I)));
}

TEST(Term, ShiftLeavesClosedTermsAlone) {
  const Com t = namedConstants().DeltaBang;
  EXPECT_EQ(shift(t, 3), t);
}

TEST(Term, Shapes) {
  EXPECT_EQ(shapeOf(ret(var("z"))), Shape::Ret);
  EXPECT_EQ(shapeOf(app(var("z"), ret(var("z")))), Shape::AppVar);
  EXPECT_EQ(shapeOf(namedConstants().DeltaBang), Shape::AppAbs);
}

TEST(Named, FreshNameAvoidsTaken) {
  EXPECT_EQ(named::freshName("x", {"y"}), "x");
  EXPECT_NE(named::freshName("x", {"x", "x1"}), "x");
  EXPECT_EQ(named::freshName("x", {"x", "x1"}).rfind("x", 0), 0u);
}

TEST(Named, AlphaEqOnTrees) {
  using named::Tree;
  const Tree a = Tree::let("x", Tree::unit(Tree::var("z")), Tree::unit(Tree::var("x")));
  const Tree b = Tree::let("y", Tree::unit(Tree::var("z")), Tree::unit(Tree::var("y")));
  const Tree c = Tree::let("z", Tree::unit(Tree::var("z")), Tree::unit(Tree::var("z")));
  EXPECT_TRUE(named::alphaEq(a, b));
  EXPECT_TRUE(named::alphaEq(a, c));
  EXPECT_EQ(named::alphaHash(a), named::alphaHash(b));
  const Tree d = Tree::let("x", Tree::unit(Tree::var("x")), Tree::unit(Tree::var("x")));
  EXPECT_FALSE(named::alphaEq(a, d));
}

TEST(Named, BridgeRoundTrips) {
  for (const Com& t : {namedConstants().VanOostrom, namedConstants().WeakT, namedConstants().BlockedBetaMz,
                       namedConstants().SigmaIdOverlap, namedConstants().DeltaBang})
    EXPECT_EQ(named::toCom(named::fromCom(t)), t);
}

TEST(Named, SortErrors) {
  using named::Tree;
  EXPECT_THROW(named::toCom(Tree::var("z")), named::SortError);
  EXPECT_THROW(named::toVal(Tree::unit(Tree::var("z"))), named::SortError);
}
