#pragma once

// Bridges between the core calculus and its siblings, and the reduction
// engines of the siblings.
//
//   <<.>> : let-notation -> core          [.] : core -> let-notation
//   <<x>> = x                             [x] = x
//   <<\x.M>> = \x.<<M>>                   [\x.M] = \x.[M]
//   <<V W>> = <<V>> !<<W>>                [!V] = [ [V] ]
//   <<[V]>> = !<<V>>                      [V !W] = [V] [W]
//   <<let x = M in N>> = (\x.<<N>>)<<M>>  [x M] = let y = [M] in x y
//                                         [(\x.N)M] = let x = [M] in [N]
//
// The last two clauses only apply when M is not of the form !W.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambdacc/ars.hpp"
#include "lambdacc/calculi.hpp"
#include "lambdacc/named.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/steps.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/term.hpp"

namespace lambdacc {

namespace translate_detail {

using named::Kind;
using named::Tree;

inline Tree mlToCore(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), mlToCore(t.child(0)));
    case Kind::App: return Tree::app(mlToCore(t.child(0)), Tree::unit(mlToCore(t.child(1))));
    case Kind::Unit: return Tree::unit(mlToCore(t.child(0)));
    case Kind::Let: return Tree::app(Tree::lam(t.name(), mlToCore(t.child(1))), mlToCore(t.child(0)));
    default: throw std::invalid_argument("not a let-notation term");
  }
}

inline Tree coreToMl(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), coreToMl(t.child(0)));
    case Kind::Unit: return Tree::unit(coreToMl(t.child(0)));
    case Kind::App: {
      const Tree& f = t.child(0);
      const Tree& m = t.child(1);
      if (m.is(Kind::Unit)) return Tree::app(coreToMl(f), coreToMl(m.child(0)));
      if (f.is(Kind::Var)) {
        std::set<std::string> taken = named::freeVars(m);
        taken.insert(f.name());
        const std::string y = named::freshName("y", taken);
        return Tree::let(y, coreToMl(m), Tree::app(f, Tree::var(y)));
      }
      return Tree::let(f.name(), coreToMl(m), coreToMl(f.child(0)));
    }
    default: throw std::invalid_argument("not a core term");
  }
}

inline Tree coreToStar(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), coreToStar(t.child(0)));
    case Kind::Unit: return Tree::unit(coreToStar(t.child(0)));
    case Kind::App: return Tree::star(coreToStar(t.child(1)), coreToStar(t.child(0)));
    default: throw std::invalid_argument("not a core term");
  }
}

inline Tree starToCore(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), starToCore(t.child(0)));
    case Kind::Unit: return Tree::unit(starToCore(t.child(0)));
    case Kind::Star: return Tree::app(starToCore(t.child(1)), starToCore(t.child(0)));
    default: throw std::invalid_argument("not a unit/star term");
  }
}

// Forgets every !.
inline Tree coreToKernel(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), coreToKernel(t.child(0)));
    case Kind::Unit: return coreToKernel(t.child(0));
    case Kind::App: return Tree::app(coreToKernel(t.child(0)), coreToKernel(t.child(1)));
    default: throw std::invalid_argument("not a core term");
  }
}

inline Tree kernelToCore(const Tree& t);

// A kernel value in function position keeps its shape.
inline Tree kernelFunToCore(const Tree& v) {
  if (v.is(Kind::Var)) return v;
  return Tree::lam(v.name(), kernelToCore(v.child(0)));
}

// Puts ! in front of every value not in function position.
inline Tree kernelToCore(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Lam: return Tree::unit(kernelFunToCore(t));
    case Kind::App:
      if (!t.child(0).isValue()) throw std::invalid_argument("not a kernel term: computation in function position");
      return Tree::app(kernelFunToCore(t.child(0)), kernelToCore(t.child(1)));
    default: throw std::invalid_argument("not a kernel term");
  }
}

inline Tree embed(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t;
    case Kind::Lam: return Tree::lam(t.name(), embed(t.child(0)));
    case Kind::App: {
      const Tree& p = t.child(0);
      const Tree& q = t.child(1);
      if (p.isValue()) return Tree::app(embed(p), embed(q));
      const std::string w = named::freshName("w", named::freeVars(q));
      return Tree::app(Tree::lam(w, Tree::app(Tree::var(w), embed(q))), embed(p));
    }
    default: throw std::invalid_argument("not a call-by-value term");
  }
}

}  // namespace translate_detail

inline Com mlToCc(const MlTerm& p) { return named::toCom(translate_detail::mlToCore(p.tree)); }
inline MlTerm ccToMl(const Com& t) { return MlTerm(translate_detail::coreToMl(named::fromCom(t))); }

inline StarTerm ccToStar(const Com& t) { return StarTerm(translate_detail::coreToStar(named::fromCom(t))); }
inline Com starToCc(const StarTerm& p) { return named::toCom(translate_detail::starToCore(p.tree)); }

inline CbvTerm ccToKernel(const Com& t) { return CbvTerm(translate_detail::coreToKernel(named::fromCom(t))); }
inline Com kernelToCc(const CbvTerm& p) { return named::toCom(translate_detail::kernelToCore(p.tree)); }

inline CbvTerm cbvEmbed(const CbvTerm& p) { return CbvTerm(translate_detail::embed(p.tree)); }

// ---------------------------------------------------------------------------
// Let-notation reduction

enum class MlRule { Beta, Eta, LetBeta, LetEta, LetAss };

inline const char* mlRuleName(MlRule r) {
  switch (r) {
    case MlRule::Beta: return "c.beta";
    case MlRule::Eta: return "c.eta";
    case MlRule::LetBeta: return "c.let.beta";
    case MlRule::LetEta: return "c.let.eta";
    case MlRule::LetAss: return "c.let.ass";
  }
  return "?";
}

// Full: every subterm. LetEval: E ::= <> | let x = E in M.
enum class MlClosure { Full, LetEval };

namespace translate_detail {

inline void mlRoot(const Tree& t, std::vector<std::pair<MlRule, Tree>>& out) {
  switch (t.kind()) {
    case Kind::App: {
      const Tree& f = t.child(0);
      if (f.is(Kind::Lam)) out.push_back({MlRule::Beta, named::substitute(f.child(0), f.name(), t.child(1))});
      break;
    }
    case Kind::Lam: {
      const Tree& b = t.child(0);
      if (b.is(Kind::App) && b.child(1).is(Kind::Var) && b.child(1).name() == t.name() &&
          !named::freeVars(b.child(0)).count(t.name()))
        out.push_back({MlRule::Eta, b.child(0)});
      break;
    }
    case Kind::Let: {
      const std::string& x = t.name();
      const Tree& m = t.child(0);
      const Tree& n = t.child(1);
      if (m.is(Kind::Unit)) out.push_back({MlRule::LetBeta, named::substitute(n, x, m.child(0))});
      if (n.is(Kind::Unit) && n.child(0).is(Kind::Var) && n.child(0).name() == x && !named::freeVars(m).count(x))
        out.push_back({MlRule::LetEta, m});
      if (m.is(Kind::Let)) {
        // let y = (let x = L in M) in N  ->  let x = L in (let y = M in N)
        Tree inner = m;
        const auto fvN = named::freeVars(Tree::lam(x, n));
        if (fvN.count(inner.name())) {
          std::set<std::string> taken = fvN;
          const auto fvM = named::freeVars(Tree::lam(inner.name(), inner.child(1)));
          taken.insert(fvM.begin(), fvM.end());
          taken.insert(x);
          inner = named::renameBinder(inner, named::freshName(inner.name(), taken));
        }
        out.push_back({MlRule::LetAss, Tree::let(inner.name(), inner.child(0), Tree::let(x, inner.child(1), n))});
      }
      break;
    }
    default: break;
  }
}

inline void mlSteps(const Tree& t, MlClosure cls, std::vector<std::pair<MlRule, Tree>>& out) {
  mlRoot(t, out);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (cls == MlClosure::LetEval && !(t.is(Kind::Let) && i == 0)) continue;
    std::vector<std::pair<MlRule, Tree>> sub;
    mlSteps(t.child(i), cls, sub);
    for (auto& [rule, s] : sub) {
      std::vector<Tree> kids;
      for (std::size_t k = 0; k < t.arity(); ++k) kids.push_back(k == i ? s : t.child(k));
      out.push_back({rule, t.withChildren(std::move(kids))});
    }
  }
}

}  // namespace translate_detail

inline std::vector<std::pair<MlRule, MlTerm>> mlStep(const MlTerm& p, MlClosure cls) {
  std::vector<std::pair<MlRule, named::Tree>> raw;
  translate_detail::mlSteps(p.tree, cls, raw);
  std::vector<std::pair<MlRule, MlTerm>> out;
  for (auto& [r, t] : raw) out.push_back({r, MlTerm(std::move(t))});
  return out;
}

inline ars::StepFn<MlTerm, MlRule> mlStepFn(MlClosure cls) {
  return [cls](const MlTerm& p) {
    std::vector<ars::Transition<MlTerm, MlRule>> out;
    for (auto& [r, t] : mlStep(p, cls)) out.push_back({r, std::move(t)});
    return out;
  };
}

// ---------------------------------------------------------------------------
// Unit/star reduction, under all contexts
//
//   beta_c  unit V * \x.M              -> M[V/x]
//   id      M * \x.unit x              -> M
//   sigma   (L * \x.M) * \y.N          -> L * \x.(M * \y.N)

namespace translate_detail {

inline bool isUnitId(const Tree& v) {
  return v.is(Kind::Lam) && v.child(0).is(Kind::Unit) && v.child(0).child(0).is(Kind::Var) &&
         v.child(0).child(0).name() == v.name();
}

inline void starRoot(const Tree& t, RuleSet rules, std::vector<std::pair<Rule, Tree>>& out) {
  if (!t.is(Kind::Star)) return;
  const Tree& m = t.child(0);
  const Tree& v = t.child(1);
  if (rules.has(Rule::BetaC) && m.is(Kind::Unit) && v.is(Kind::Lam))
    out.push_back({Rule::BetaC, named::substitute(v.child(0), v.name(), m.child(0))});
  if (rules.has(Rule::Sigma) && v.is(Kind::Lam) && m.is(Kind::Star) && m.child(1).is(Kind::Lam)) {
    Tree inner = m.child(1);
    const auto fvN = named::freeVars(v);
    if (fvN.count(inner.name())) {
      std::set<std::string> taken = fvN;
      const auto fvM = named::freeVars(inner);
      taken.insert(fvM.begin(), fvM.end());
      inner = named::renameBinder(inner, named::freshName(inner.name(), taken));
    }
    out.push_back({Rule::Sigma, Tree::star(m.child(0), Tree::lam(inner.name(), Tree::star(inner.child(0), v)))});
  }
  if (isUnitId(v)) {
    if (rules.has(Rule::Id)) out.push_back({Rule::Id, m});
    if (rules.has(Rule::Iota) && !m.is(Kind::Unit)) out.push_back({Rule::Iota, m});
  }
}

template <class Root>
void everywhere(const Tree& t, const Root& root, std::vector<std::pair<Rule, Tree>>& out) {
  root(t, out);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::vector<std::pair<Rule, Tree>> sub;
    everywhere(t.child(i), root, sub);
    for (auto& [rule, s] : sub) {
      std::vector<Tree> kids;
      for (std::size_t k = 0; k < t.arity(); ++k) kids.push_back(k == i ? s : t.child(k));
      out.push_back({rule, t.withChildren(std::move(kids))});
    }
  }
}

inline void betaVRoot(const Tree& t, std::vector<std::pair<Rule, Tree>>& out) {
  if (t.is(Kind::App) && t.child(0).is(Kind::Lam) && t.child(1).isValue()) {
    const Tree& f = t.child(0);
    out.push_back({Rule::BetaC, named::substitute(f.child(0), f.name(), t.child(1))});
  }
}

}  // namespace translate_detail

inline std::vector<std::pair<Rule, StarTerm>> starStep(const StarTerm& p, RuleSet rules = RuleSet::core()) {
  std::vector<std::pair<Rule, named::Tree>> raw;
  translate_detail::everywhere(
      p.tree, [&](const named::Tree& t, auto& out) { translate_detail::starRoot(t, rules, out); }, raw);
  std::vector<std::pair<Rule, StarTerm>> out;
  for (auto& [r, t] : raw) out.push_back({r, StarTerm(std::move(t))});
  return out;
}

// beta_v under every context: (\x.M)V -> M[V/x]. Serves both the kernel and
// unrestricted call-by-value terms. Labelled BetaC, its image in the core.
inline std::vector<CbvTerm> betaVStep(const CbvTerm& p) {
  std::vector<std::pair<Rule, named::Tree>> raw;
  translate_detail::everywhere(
      p.tree, [](const named::Tree& t, auto& out) { translate_detail::betaVRoot(t, out); }, raw);
  std::vector<CbvTerm> out;
  for (auto& [r, t] : raw) out.push_back(CbvTerm(std::move(t)));
  return out;
}

inline ars::StepFn<CbvTerm, Rule> betaVStepFn() {
  return [](const CbvTerm& p) {
    std::vector<ars::Transition<CbvTerm, Rule>> out;
    for (auto& t : betaVStep(p)) out.push_back({Rule::BetaC, std::move(t)});
    return out;
  };
}

// ---------------------------------------------------------------------------
// Convertibility, approximated by joinability of the two forward cones.

inline Truth fromVerdict(ars::Verdict v) {
  switch (v) {
    case ars::Verdict::Pass: return Truth::True;
    case ars::Verdict::Fail: return Truth::False;
    case ars::Verdict::Unknown: return Truth::Unknown;
  }
  return Truth::Unknown;
}

inline Truth boundedConvertible(const Com& a, const Com& b, RuleSet rules, ars::Bounds bounds) {
  const ComStep step = comStep(ClosureClass::Full, rules);
  return fromVerdict(ars::joinable(a, b, step, step, bounds));
}

inline Truth boundedConvertible(const MlTerm& a, const MlTerm& b, ars::Bounds bounds) {
  const auto step = mlStepFn(MlClosure::Full);
  return fromVerdict(ars::joinable(a, b, step, step, bounds));
}

}  // namespace lambdacc
