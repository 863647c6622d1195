#pragma once

// The named examples, each run as a one-term check against a fixed table of
// expected verdicts. An expected "fail" means the example is a
// counterexample and the check must find it.

#include <functional>
#include <string>
#include <vector>

#include "lambdacc/ars.hpp"
#include "lambdacc/constants.hpp"
#include "lambdacc/properties.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/steps.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/syntax.hpp"
#include "lambdacc/translations.hpp"

namespace lambdacc {

struct GalleryScenario {
  std::string name;
  ars::Verdict expected;
  std::function<void(ars::CheckReport&)> run;
};

namespace gallery_detail {

inline void expect(bool cond, ars::CheckReport& r, std::string note, std::vector<std::string> terms = {}) {
  if (cond) r.pass();
  else r.fail({std::move(note), std::move(terms)});
}

inline std::vector<std::string> ruleNames(const Trace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps()) out.push_back(ruleName(s.redex.rule));
  return out;
}

}  // namespace gallery_detail

inline const std::vector<GalleryScenario>& galleryScenarios() {
  using ars::Verdict;
  using gallery_detail::expect;
  static const std::vector<GalleryScenario> table = {
      {"no weak redex in VanOostrom", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().VanOostrom;
         expect(enumerateRedexes(t, ClosureClass::Weak, RuleSet::all()).empty(), r, "weak redex found",
                {printCom(t)});
       }},
      {"VanOostrom reaches z!z in 2 full steps (beta_c, id)", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().VanOostrom;
         const Outcome o = leftmost(t, ClosureClass::Full, RuleSet::core());
         const bool ok = o.normal() && o.trace.size() == 2 && printCom(o.term) == "z!z" &&
                         gallery_detail::ruleNames(o.trace) == std::vector<std::string>{"beta_c", "id"};
         expect(ok, r, "unexpected reduction", {printCom(t), printCom(o.term)});
       }},
      {"weak factorization of the whole calculus fails on VanOostrom", Verdict::Fail,
       [](ars::CheckReport& r) {
         ars::checkFactorization<Com, RedexOccurrence>(
             namedConstants().VanOostrom, comStep(ClosureClass::Weak, RuleSet::core()),
             comStepOutside(ClosureClass::Full, ClosureClass::Weak, RuleSet::core()), 2, {8, 1000}, {8, 1000},
             lab_detail::show, r);
       }},
      {"WeakT has two distinct weak normal forms under sigma", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().WeakT;
         const auto g = ars::reachable(t, comStep(ClosureClass::Weak, {Rule::Sigma}), {8, 1000});
         const auto nfs = g.normalForms();
         std::vector<std::string> terms{printCom(t)};
         for (std::size_t i : nfs) terms.push_back(printCom(g.node(i)));
         expect(!g.truncated() && nfs.size() == 2 && !(g.node(nfs[0]) == g.node(nfs[1])), r,
                "expected exactly two normal forms", terms);
       }},
      {"WeakT: every weak sigma/beta_c run takes 0 beta_c steps", Verdict::Pass,
       [](ars::CheckReport& r) {
         const auto s = betaCountStats(namedConstants().WeakT, ClosureClass::Weak, 20, Fuel{1000});
         expect(s.terminated == s.samples && s.betaCounts == std::set<std::size_t>{0}, r, "runs disagree");
       }},
      {"M_z is beta_c-normal but not sigma/beta_c-normal", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().BlockedBetaMz;
         expect(isNormal(t, ClosureClass::Full, {Rule::BetaC}) && !isNormal(t, ClosureClass::Full, RuleSet::sigmaBetaC()),
                r, "wrong normality", {printCom(t)});
       }},
      {"iterated surface strategy from M_z enters the 1-cycle N_z -> N_z", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().BlockedBetaMz;
         const Outcome o = iteratedStrategy(t, ClosureClass::Surface, Fuel{1000});
         bool loop = false;
         for (const auto& s : reducts(o.term, ClosureClass::Full, {Rule::BetaC})) loop = loop || s.result == o.term;
         const bool ok = o.status == Status::Cycle && loop &&
                         gallery_detail::ruleNames(o.trace) == std::vector<std::string>{"sigma", "beta_c"};
         expect(ok, r, "no 1-cycle", {printCom(t), printCom(o.term)});
       }},
      {"sigma/id overlap peak joins only through beta_c", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().SigmaIdOverlap;
         const auto peak = reducts(t, ClosureClass::Full, {Rule::Sigma, Rule::Id});
         if (peak.size() != 2) {
           r.fail({"expected a two-step peak", {printCom(t)}});
           return;
         }
         const Com& a = peak[0].result;
         const Com& b = peak[1].result;
         const ComStep sigmaId = comStep(ClosureClass::Full, {Rule::Sigma, Rule::Id});
         const ComStep all = comStep(ClosureClass::Full, RuleSet::core());
         const bool ok = ars::joinable(a, b, sigmaId, sigmaId, {8, 1000}) == ars::Verdict::Fail &&
                         ars::joinable(a, b, all, all, {4, 1000}) == ars::Verdict::Pass;
         expect(ok, r, "joinability differs", {printCom(t), printCom(a), printCom(b)});
       }},
      {"sigma + id is not confluent", Verdict::Fail,
       [](ars::CheckReport& r) {
         ars::checkLocalConfluence<Com, RedexOccurrence>(namedConstants().SigmaIdOverlap,
                                                         comStep(ClosureClass::Full, {Rule::Sigma, Rule::Id}),
                                                         {8, 1000}, lab_detail::show, r);
       }},
      {"let-term T has two sequencing normal forms T' and T''", Verdict::Pass,
       [](ars::CheckReport& r) {
         const MlTerm t = parseMl("let z = (let x = (let y = z z in z z) in z z) in z z");
         const MlTerm t1 = parseMl("let y = z z in let x = z z in let z = z z in z z");
         const MlTerm t2 = parseMl("let y = z z in let z = (let x = z z in z z) in z z");
         const auto g = ars::reachable(t, mlStepFn(MlClosure::LetEval), {8, 1000});
         std::vector<MlTerm> nfs;
         for (std::size_t i : g.normalForms()) nfs.push_back(g.node(i));
         std::vector<std::string> terms{printMl(t)};
         for (const auto& n : nfs) terms.push_back(printMl(n));
         const bool ok = !g.truncated() && nfs.size() == 2 &&
                         ((nfs[0] == t1 && nfs[1] == t2) || (nfs[0] == t2 && nfs[1] == t1));
         expect(ok, r, "unexpected normal forms", terms);
       }},
      {"let-term M has no sequencing step yet reduces to z z", Verdict::Pass,
       [](ars::CheckReport& r) {
         const MlTerm m = parseMl("let y = z z in let x = [y] in [x]");
         const auto g = ars::reachable(m, mlStepFn(MlClosure::Full), {4, 1000});
         expect(mlStep(m, MlClosure::LetEval).empty() && g.contains(parseMl("z z")), r, "unexpected steps",
                {printMl(m)});
       }},
      {"Delta!Delta: weak beta_c evaluation cycles after one step", Verdict::Pass,
       [](ars::CheckReport& r) {
         const Com t = namedConstants().DeltaBang;
         const Outcome o = weakBetaC(t, Fuel{1000});
         expect(o.status == Status::Cycle && o.trace.size() == 1 && halts(t, Fuel{1000}) == Truth::False, r,
                "no cycle", {printCom(t)});
       }},
  };
  return table;
}

inline std::vector<ars::CheckReport> galleryRun() {
  std::vector<ars::CheckReport> out;
  for (const auto& s : galleryScenarios()) {
    ars::CheckReport r;
    r.property = s.name;
    r.universe = "gallery";
    r.expectFailure = s.expected == ars::Verdict::Fail;
    s.run(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lambdacc
