#pragma once

// Bounded checks of the metatheory of the core calculus over an enumerated
// universe of small terms. Every suite returns CheckReports; a report whose
// ok() is false is a genuine counterexample (or a missing one, for
// properties that are expected to fail).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lambdacc/ars.hpp"
#include "lambdacc/constants.hpp"
#include "lambdacc/enumerate.hpp"
#include "lambdacc/measures.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/steps.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/syntax.hpp"
#include "lambdacc/term.hpp"
#include "lambdacc/translations.hpp"

namespace lambdacc {

struct LabConfig {
  UniverseSpec universe;
  std::size_t jobs = 1;
  Fuel fuel{1000};
  std::size_t seeds = 20;
  std::size_t factorLength = 4;
  std::size_t postponeLength = 3;
  ars::Bounds reorder{8, 3000};  // searching for the reordered sequence
  ars::Bounds join{4, 3000};     // closing peaks
  ars::Bounds graph{12, 3000};   // searching for normal forms and returns
  ars::Bounds convert{6, 3000};  // convertibility of translation round trips
  std::size_t cbvMax = 8;
  std::size_t mlMax = 6;
};

namespace lab_detail {

inline std::string show(const Com& t) { return printCom(t); }
inline std::string showCounted(const Counted& c) { return printCom(c.term) + " [beta_c=" + std::to_string(c.betaC) + "]"; }

inline ars::CheckReport report(std::string property, const LabConfig& cfg, bool expectFailure = false) {
  ars::CheckReport r;
  r.property = std::move(property);
  r.universe = cfg.universe.describe();
  r.expectFailure = expectFailure;
  return r;
}

}  // namespace lab_detail

// ---------------------------------------------------------------------------
// Factorization and postponement

// t ->* N by the whole calculus reorders as surface steps, then the rest.
inline ars::CheckReport checkSurfaceFactorization(const std::vector<Com>& universe, const LabConfig& cfg) {
  const ComStep e = comStep(ClosureClass::Surface, RuleSet::core());
  const ComStep i = comStepOutside(ClosureClass::Full, ClosureClass::Surface, RuleSet::core());
  return ars::overUniverse(lab_detail::report("surface factorization", cfg), universe, cfg.jobs,
                           [&](const Com& t, ars::CheckReport& r) {
                             ars::checkFactorization<Com, RedexOccurrence>(t, e, i, cfg.factorLength, cfg.reorder,
                                                                           cfg.reorder, lab_detail::show, r);
                           });
}

// Surface sigma/beta_c sequences reorder as weak steps, then surface steps
// under a lambda, with the same number of beta_c steps.
inline ars::CheckReport checkWeakFactorizationCounted(const std::vector<Com>& universe, const LabConfig& cfg) {
  const auto e = counting(comStep(ClosureClass::Weak, RuleSet::sigmaBetaC()));
  const auto i = counting(comStepOutside(ClosureClass::Surface, ClosureClass::Weak, RuleSet::sigmaBetaC()));
  return ars::overUniverse(lab_detail::report("weak factorization of surface sigma/beta_c, beta_c counts kept", cfg),
                           universe, cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
                             ars::checkFactorization<Counted, RedexOccurrence>(
                                 Counted{t, 0}, e, i, cfg.factorLength, cfg.reorder, cfg.reorder,
                                 lab_detail::showCounted, r);
                           });
}

// Weak factorization of the whole calculus is expected to fail; the first
// term checked is the gallery counterexample.
inline ars::CheckReport checkWeakFactorizationCore(const std::vector<Com>& universe, const LabConfig& cfg) {
  std::vector<Com> terms{namedConstants().VanOostrom};
  terms.insert(terms.end(), universe.begin(), universe.end());
  const ComStep e = comStep(ClosureClass::Weak, RuleSet::core());
  const ComStep i = comStepOutside(ClosureClass::Full, ClosureClass::Weak, RuleSet::core());
  auto rep = lab_detail::report("weak factorization of the whole calculus", cfg, true);
  rep.universe = "the van Oostrom term, then " + rep.universe;
  return ars::overUniverse(rep, terms, cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
    ars::checkFactorization<Com, RedexOccurrence>(t, e, i, cfg.factorLength, cfg.reorder, cfg.reorder,
                                                  lab_detail::show, r);
  });
}

// Surface sequences reorder as sigma/beta_c steps, then iota steps.
inline ars::CheckReport checkIotaPostponement(const std::vector<Com>& universe, const LabConfig& cfg) {
  const ComStep e = comStep(ClosureClass::Surface, RuleSet::sigmaBetaC());
  const ComStep i = comStep(ClosureClass::Surface, {Rule::Iota});
  return ars::overUniverse(lab_detail::report("iota postponement", cfg), universe, cfg.jobs,
                           [&](const Com& t, ars::CheckReport& r) {
                             ars::checkFactorization<Com, RedexOccurrence>(t, e, i, cfg.postponeLength, cfg.reorder,
                                                                           cfg.reorder, lab_detail::show, r);
                           });
}

// ---------------------------------------------------------------------------
// Evaluation

namespace lab_detail {

inline Truth returnsByGraph(const Com& t, const LabConfig& cfg) {
  const auto g = ars::reachable(t, comStep(ClosureClass::Full, RuleSet::core()), cfg.graph);
  if (g.findNode([](const Com& m) { return m.isRet(); })) return Truth::True;
  return g.truncated() ? Truth::Unknown : Truth::False;
}

inline Truth returnsByRun(const Outcome& o) {
  switch (o.status) {
    case Status::NormalForm: return o.term.isRet() ? Truth::True : Truth::False;
    case Status::Cycle: return Truth::False;
    case Status::FuelExhausted: return Truth::Unknown;
  }
  return Truth::Unknown;
}

}  // namespace lab_detail

// Returning a value: graph search, weak beta_c and root evaluation agree, and
// the two evaluators take the same number of beta_c steps.
inline std::vector<ars::CheckReport> checkReturnValue(const std::vector<Com>& universe, const LabConfig& cfg) {
  auto agree = lab_detail::report("returning a value: graph, weak beta_c and root evaluation agree", cfg);
  auto counts = lab_detail::report("weak beta_c and root evaluation use the same beta_c steps", cfg);
  auto parts = ars::parallelMap<std::pair<ars::CheckReport, ars::CheckReport>>(
      universe.size(), cfg.jobs, [&](std::size_t k) {
        const Com& t = universe[k];
        ars::CheckReport a, c;
        const Outcome weak = weakBetaC(t, cfg.fuel);
        const Outcome root = rootEval(t, cfg.fuel);
        const Truth g = lab_detail::returnsByGraph(t, cfg);
        const Truth w = lab_detail::returnsByRun(weak);
        const Truth r = lab_detail::returnsByRun(root);
        std::vector<Truth> known;
        for (Truth x : {g, w, r})
          if (x != Truth::Unknown) known.push_back(x);
        const bool agreeing = std::adjacent_find(known.begin(), known.end(), std::not_equal_to<>()) == known.end();
        if (agreeing && known.size() == 3)
          a.pass();
        else if (agreeing)
          a.undecided();
        else
          a.fail({std::string("graph ") + truthName(g) + ", weak " + truthName(w) + ", root " + truthName(r),
                  {printCom(t)}});
        if (weak.returnsValue() && root.returnsValue()) {
          if (weak.trace.betaCount() == root.trace.betaCount() && weak.term == root.term)
            c.pass();
          else
            c.fail({"beta_c counts " + std::to_string(weak.trace.betaCount()) + " vs " +
                        std::to_string(root.trace.betaCount()),
                    {printCom(t), printCom(weak.term), printCom(root.term)}});
        }
        return std::make_pair(a, c);
      });
  for (auto& [a, c] : parts) {
    agree.merge(a);
    counts.merge(c);
  }
  return {agree, counts};
}

// Whether halting is preserved by every single step of the calculus.
inline ars::CheckReport checkAdequacy(const std::vector<Com>& universe, const LabConfig& cfg) {
  const ComStep step = comStep(ClosureClass::Full, RuleSet::core());
  return ars::overUniverse(lab_detail::report("adequacy: halting is invariant under reduction", cfg), universe,
                           cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
                             const Truth h = halts(t, cfg.fuel);
                             for (const auto& s : step(t)) {
                               const Truth hs = halts(s.target, cfg.fuel);
                               if (h == Truth::Unknown || hs == Truth::Unknown) r.undecided();
                               else if (h == hs) r.pass();
                               else
                                 r.fail({std::string("halts ") + truthName(h) + " before, " + truthName(hs) +
                                             " after " + ruleName(s.label.rule),
                                         {printCom(t), printCom(s.target)}});
                             }
                           });
}

// ---------------------------------------------------------------------------
// Normalization

struct BetaCountStats {
  std::size_t samples = 0;
  std::size_t terminated = 0;
  std::set<std::size_t> betaCounts;        // over terminated samples
  std::vector<Com> finals;                 // distinct normal forms reached

  std::size_t distinctFinals() const { return finals.size(); }
};

inline BetaCountStats betaCountStats(const Com& t, ClosureClass cls, std::size_t samples, Fuel fuel) {
  BetaCountStats s;
  s.samples = samples;
  for (std::size_t seed = 1; seed <= samples; ++seed) {
    const Outcome o = randomMaximal(t, cls, RuleSet::sigmaBetaC(), seed, fuel);
    if (!o.normal()) continue;
    ++s.terminated;
    s.betaCounts.insert(o.trace.betaCount());
    if (std::find(s.finals.begin(), s.finals.end(), o.term) == s.finals.end()) s.finals.push_back(o.term);
  }
  return s;
}

// Uniform normalization of surface and weak sigma/beta_c reduction.
inline std::vector<ars::CheckReport> checkUniformNormalization(const std::vector<Com>& universe,
                                                               const LabConfig& cfg) {
  auto surface = lab_detail::report("uniform normalization, surface sigma/beta_c", cfg);
  auto weak = lab_detail::report("uniform normalization, weak sigma/beta_c", cfg);
  auto parts = ars::parallelMap<std::pair<ars::CheckReport, ars::CheckReport>>(
      universe.size(), cfg.jobs, [&](std::size_t k) {
        const Com& t = universe[k];
        std::pair<ars::CheckReport, ars::CheckReport> out;
        for (ClosureClass cls : {ClosureClass::Surface, ClosureClass::Weak}) {
          ars::CheckReport& r = cls == ClosureClass::Surface ? out.first : out.second;
          const BetaCountStats s = betaCountStats(t, cls, cfg.seeds, cfg.fuel);
          std::string problem;
          if (s.terminated != 0 && s.terminated != s.samples) problem = "some runs terminate, others do not";
          else if (s.betaCounts.size() > 1) problem = "different beta_c counts";
          else if (cls == ClosureClass::Surface && s.distinctFinals() > 1) problem = "different normal forms";
          if (problem.empty()) {
            r.pass();
          } else {
            std::vector<std::string> terms{printCom(t)};
            for (const Com& f : s.finals) terms.push_back(printCom(f));
            r.fail({problem, terms});
          }
        }
        return out;
      });
  for (auto& [s, w] : parts) {
    surface.merge(s);
    weak.merge(w);
  }
  return {surface, weak};
}

namespace lab_detail {

// The normal forms found by a bounded search; `complete` when the search
// was not cut off.
struct NormalFormSearch {
  std::vector<Com> forms;
  bool complete = false;
};

inline NormalFormSearch searchNormalForms(const Com& t, RuleSet rules, ars::Bounds b) {
  const auto g = ars::reachable(t, comStep(ClosureClass::Full, rules), b);
  NormalFormSearch s;
  for (std::size_t i : g.normalForms()) s.forms.push_back(g.node(i));
  s.complete = !g.truncated();
  return s;
}

}  // namespace lab_detail

// The iterated strategies find the sigma/beta_c normal form whenever one
// exists; normalizeFull then finds the normal form of the calculus; a normal
// form exists for the calculus iff it exists for sigma/beta_c.
inline std::vector<ars::CheckReport> checkNormalization(const std::vector<Com>& universe, const LabConfig& cfg) {
  auto strategy = lab_detail::report("iterated weak and surface strategies reach the sigma/beta_c normal form", cfg);
  auto full = lab_detail::report("normalizeFull reaches the normal form of the calculus", cfg);
  auto irrelevance = lab_detail::report("iota irrelevance: a normal form exists with or without id", cfg);
  auto betaOnly = lab_detail::report("sigma/beta_c normalizing implies beta_c normalizing", cfg);
  struct Part {
    ars::CheckReport s, f, i, b;
  };
  auto parts = ars::parallelMap<Part>(universe.size(), cfg.jobs, [&](std::size_t k) {
    const Com& t = universe[k];
    Part p;
    const auto sb = lab_detail::searchNormalForms(t, RuleSet::sigmaBetaC(), cfg.graph);
    const auto core = lab_detail::searchNormalForms(t, RuleSet::core(), cfg.graph);

    if (sb.forms.size() > 1) {
      p.s.fail({"two sigma/beta_c normal forms", {printCom(t), printCom(sb.forms[0]), printCom(sb.forms[1])}});
    } else if (sb.forms.size() == 1) {
      for (ClosureClass e : {ClosureClass::Weak, ClosureClass::Surface}) {
        const Outcome o = iteratedStrategy(t, e, cfg.fuel);
        if (o.normal() && o.term == sb.forms[0]) p.s.pass();
        else
          p.s.fail({std::string("iterated ") + closureName(e) + " ends in " + statusName(o.status),
                    {printCom(t), printCom(sb.forms[0]), printCom(o.term)}});
      }
    } else {
      p.s.undecided();
    }

    if (core.forms.size() > 1) {
      p.f.fail({"two normal forms", {printCom(t), printCom(core.forms[0]), printCom(core.forms[1])}});
    } else if (core.forms.size() == 1) {
      for (ClosureClass e : {ClosureClass::Weak, ClosureClass::Surface}) {
        const Outcome o = normalizeFull(t, e, cfg.fuel);
        if (o.normal() && o.term == core.forms[0]) p.f.pass();
        else
          p.f.fail({std::string("normalizeFull ") + closureName(e) + " ends in " + statusName(o.status),
                    {printCom(t), printCom(core.forms[0]), printCom(o.term)}});
      }
    } else {
      p.f.undecided();
    }

    const bool sbHas = !sb.forms.empty();
    const bool coreHas = !core.forms.empty();
    if (sbHas == coreHas) {
      if (sbHas || (sb.complete && core.complete)) p.i.pass();
      else p.i.undecided();
    } else if ((sbHas && core.complete) || (coreHas && sb.complete)) {
      p.i.fail({sbHas ? "sigma/beta_c normal form but none for the calculus"
                      : "normal form for the calculus but none for sigma/beta_c",
                {printCom(t)}});
    } else {
      p.i.undecided();
    }

    if (sbHas) {
      const auto beta = lab_detail::searchNormalForms(t, {Rule::BetaC}, cfg.graph);
      if (!beta.forms.empty()) p.b.pass();
      else if (beta.complete) p.b.fail({"no beta_c normal form", {printCom(t)}});
      else p.b.undecided();
    }
    return p;
  });
  for (const auto& p : parts) {
    strategy.merge(p.s);
    full.merge(p.f);
    irrelevance.merge(p.i);
    betaOnly.merge(p.b);
  }
  return {strategy, full, irrelevance, betaOnly};
}

// ---------------------------------------------------------------------------
// Termination measure for sigma and id

namespace lab_detail {

// Length of the longest sigma/id sequence from t, memoised over the graph.
inline std::size_t longestSigmaId(const Com& t, std::unordered_map<Com, std::size_t>& memo) {
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  std::size_t best = 0;
  for (const auto& r : reducts(t, ClosureClass::Full, {Rule::Sigma, Rule::Id}))
    best = std::max(best, 1 + longestSigmaId(r.result, memo));
  memo.emplace(t, best);
  return best;
}

}  // namespace lab_detail

inline std::vector<ars::CheckReport> checkMeasureDescent(const std::vector<Com>& universe, const LabConfig& cfg) {
  auto descent = lab_detail::report("id steps shrink the size; sigma steps keep it and shrink aux", cfg);
  auto bound = lab_detail::report("sigma/id sequences are no longer than size + aux", cfg);
  auto parts = ars::parallelMap<std::pair<ars::CheckReport, ars::CheckReport>>(
      universe.size(), cfg.jobs, [&](std::size_t k) {
        const Com& t = universe[k];
        std::pair<ars::CheckReport, ars::CheckReport> out;
        const MeasurePair m = measure(t);
        for (const auto& r : reducts(t, ClosureClass::Full, {Rule::Sigma, Rule::Id})) {
          const MeasurePair n = measure(r.result);
          const bool ok = r.redex.rule == Rule::Id ? n.size < m.size : (n.size == m.size && n.aux < m.aux);
          if (ok) out.first.pass();
          else
            out.first.fail({std::string(ruleName(r.redex.rule)) + " step: (" + std::to_string(m.size) + ", " +
                                std::to_string(m.aux) + ") -> (" + std::to_string(n.size) + ", " +
                                std::to_string(n.aux) + ")",
                            {printCom(t), printCom(r.result)}});
        }
        std::unordered_map<Com, std::size_t> memo;
        const std::size_t len = lab_detail::longestSigmaId(t, memo);
        if (len <= m.size + m.aux) out.second.pass();
        else out.second.fail({"longest sequence " + std::to_string(len), {printCom(t)}});
        return out;
      });
  for (auto& [d, b] : parts) {
    descent.merge(d);
    bound.merge(b);
  }
  return {descent, bound};
}

// ---------------------------------------------------------------------------
// Confluence

inline std::vector<ars::CheckReport> checkConfluenceMatrix(const std::vector<Com>& universe, const LabConfig& cfg) {
  struct Combo {
    const char* name;
    RuleSet rules;
  };
  const Combo confluent[] = {
      {"beta_c", {Rule::BetaC}},
      {"id", {Rule::Id}},
      {"sigma", {Rule::Sigma}},
      {"beta_c + id", {Rule::BetaC, Rule::Id}},
      {"beta_c + sigma", {Rule::BetaC, Rule::Sigma}},
      {"beta_c + sigma + id", RuleSet::core()},
  };
  const Com overlap = namedConstants().SigmaIdOverlap;
  std::vector<Com> withOverlap{overlap};
  withOverlap.insert(withOverlap.end(), universe.begin(), universe.end());
  // No term under 11 nodes has two sigma redexes, so the gallery terms go
  // first to give the sigma rows some peaks.
  const auto& k = namedConstants();
  std::vector<Com> terms{k.WeakT, k.BlockedBetaMz, k.VanOostrom, k.DeltaBang};
  terms.insert(terms.end(), universe.begin(), universe.end());
  const auto report = [&](const std::string& property) {
    auto r = lab_detail::report(property, cfg);
    r.universe = "gallery terms, then " + r.universe;
    return r;
  };

  std::vector<ars::CheckReport> out;
  for (ClosureClass cls : {ClosureClass::Surface, ClosureClass::Full}) {
    const std::string where = cls == ClosureClass::Surface ? "surface " : "full ";
    for (const Combo& c : confluent) {
      const ComStep step = comStep(cls, c.rules);
      out.push_back(ars::overUniverse(
          report(where + c.name + ": local confluence, join depth " + std::to_string(cfg.join.depth)), terms,
          cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
            ars::checkLocalConfluence<Com, RedexOccurrence>(t, step, cfg.join, lab_detail::show, r);
          }));
    }
    const ComStep sigmaId = comStep(cls, {Rule::Sigma, Rule::Id});
    auto bad = lab_detail::report(where + "sigma + id: local confluence (expected to fail)", cfg, true);
    bad.universe = "the sigma/id overlap, then " + bad.universe;
    out.push_back(ars::overUniverse(bad, withOverlap, cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
      ars::checkLocalConfluence<Com, RedexOccurrence>(t, sigmaId, cfg.join, lab_detail::show, r);
    }));

    const ComStep beta = comStep(cls, {Rule::BetaC});
    const ComStep id = comStep(cls, {Rule::Id});
    const ComStep sigma = comStep(cls, {Rule::Sigma});
    const ComStep betaId = comStep(cls, {Rule::BetaC, Rule::Id});
    const std::pair<const char*, std::pair<const ComStep*, const ComStep*>> pairs[] = {
        {"beta_c with id", {&beta, &id}},
        {"beta_c with sigma", {&beta, &sigma}},
        {"beta_c + id with sigma", {&betaId, &sigma}},
    };
    for (const auto& [name, steps] : pairs) {
      out.push_back(ars::overUniverse(
          report(where + name + ": commutation, depth " + std::to_string(cfg.join.depth)), terms, cfg.jobs, [&, s1 = steps.first, s2 = steps.second](const Com& t, ars::CheckReport& r) {
            ars::checkCommutation<Com, RedexOccurrence>(t, *s1, *s2, cfg.join, lab_detail::show, r);
          }));
    }
  }
  // Weak reduction is not confluent; WeakT goes first.
  std::vector<Com> withWeakT{namedConstants().WeakT};
  withWeakT.insert(withWeakT.end(), universe.begin(), universe.end());
  const ComStep weakSigmaBeta = comStep(ClosureClass::Weak, RuleSet::sigmaBetaC());
  auto weak = lab_detail::report("weak sigma + beta_c: local confluence (expected to fail)", cfg, true);
  weak.universe = "WeakT, then " + weak.universe;
  out.push_back(ars::overUniverse(weak, withWeakT, cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
    ars::checkLocalConfluence<Com, RedexOccurrence>(t, weakSigmaBeta, cfg.join, lab_detail::show, r);
  }));

  const ComStep surfaceBeta = comStep(ClosureClass::Surface, {Rule::BetaC});
  out.push_back(ars::overUniverse(report("surface beta_c: quasi-diamond"), terms, cfg.jobs,
                                  [&](const Com& t, ars::CheckReport& r) {
                                    ars::checkQuasiDiamond<Com, RedexOccurrence>(t, surfaceBeta, lab_detail::show, r);
                                  }));
  const ComStep surfaceId = comStep(ClosureClass::Surface, {Rule::Id});
  out.push_back(ars::overUniverse(report("surface id: quasi-diamond"), terms, cfg.jobs,
                                  [&](const Com& t, ars::CheckReport& r) {
                                    ars::checkQuasiDiamond<Com, RedexOccurrence>(t, surfaceId, lab_detail::show, r);
                                  }));
  return out;
}

// ---------------------------------------------------------------------------
// Translations

namespace lab_detail {

// Same (rule, result) pairs up to alpha, as multisets.
template <class A, class B>
bool sameSteps(std::vector<std::pair<Rule, A>> xs, std::vector<std::pair<Rule, B>> ys,
               const std::function<A(const B&)>& map) {
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& [rx, x] : xs) {
    bool found = false;
    for (std::size_t j = 0; j < ys.size() && !found; ++j)
      if (!used[j] && ys[j].first == rx && map(ys[j].second) == x) found = used[j] = true;
    if (!found) return false;
  }
  return true;
}

inline bool hasVarApp(const Com& m) {
  if (m.isRet()) return m.value().isAbs() && hasVarApp(m.value().body());
  if (!m.arg().isRet() && !m.fun().isAbs()) return true;
  if (m.fun().isAbs() && hasVarApp(m.fun().body())) return true;
  return hasVarApp(m.arg());
}

inline std::vector<std::pair<Rule, Com>> coreSteps(const Com& t, RuleSet rules) {
  std::vector<std::pair<Rule, Com>> out;
  for (auto& r : reducts(t, ClosureClass::Full, rules)) out.push_back({r.redex.rule, r.result});
  return out;
}

}  // namespace lab_detail

inline std::vector<ars::CheckReport> checkTranslations(const std::vector<Com>& universe, const LabConfig& cfg) {
  std::vector<ars::CheckReport> out;
  const std::vector<std::string> z{cfg.universe.freeVar};

  // Unit/star notation.
  out.push_back(ars::overUniverse(
      lab_detail::report("unit/star: round trip is the identity, steps correspond both ways", cfg), universe,
      cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
        const StarTerm s = ccToStar(t);
        const Com back = starToCc(s);
        if (printCom(back) != printCom(t) || !(back == t)) {
          r.fail({"round trip changes the term", {printCom(t), printStar(s), printCom(back)}});
          return;
        }
        if (!(ccToStar(starToCc(s)) == s) || printStar(ccToStar(back)) != printStar(s)) {
          r.fail({"round trip changes the star term", {printStar(s)}});
          return;
        }
        std::vector<std::pair<Rule, StarTerm>> mapped;
        for (auto& [rule, m] : lab_detail::coreSteps(t, RuleSet::all())) mapped.push_back({rule, ccToStar(m)});
        const auto starSteps = starStep(s, RuleSet::all());
        if (lab_detail::sameSteps<StarTerm, StarTerm>(mapped, starSteps, [](const StarTerm& x) { return x; }))
          r.pass();
        else
          r.fail({"one-step reducts differ", {printCom(t), printStar(s)}});
      }));

  // Kernel of call-by-value, from the core side.
  out.push_back(ars::overUniverse(
      lab_detail::report("kernel: round trip is the identity, beta_c and beta_v steps correspond", cfg), universe,
      cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
        const CbvTerm k = ccToKernel(t);
        const Com back = kernelToCc(k);
        if (printCom(back) != printCom(t) || !(back == t)) {
          r.fail({"round trip changes the term", {printCom(t), printCbv(k), printCom(back)}});
          return;
        }
        std::vector<std::pair<Rule, CbvTerm>> mapped;
        for (auto& [rule, m] : lab_detail::coreSteps(t, {Rule::BetaC})) mapped.push_back({rule, ccToKernel(m)});
        std::vector<std::pair<Rule, CbvTerm>> kernelSteps;
        for (auto& m : betaVStep(k)) kernelSteps.push_back({Rule::BetaC, m});
        if (lab_detail::sameSteps<CbvTerm, CbvTerm>(mapped, kernelSteps, [](const CbvTerm& x) { return x; }))
          r.pass();
        else
          r.fail({"one-step reducts differ", {printCom(t), printCbv(k)}});
      }));

  // Kernel of call-by-value, from the kernel side.
  std::vector<CbvTerm> kernels;
  for (auto& p : enumerateCbv(cfg.cbvMax - 1, z))
    if (sorts::kernelComputation(p.tree)) kernels.push_back(p);
  auto kernelSide = lab_detail::report("kernel terms: round trip is the identity, steps correspond", cfg);
  kernelSide.universe = "kernel terms <= " + std::to_string(cfg.cbvMax - 1) + " nodes over " + cfg.universe.freeVar;
  out.push_back(ars::overUniverse(kernelSide, kernels, cfg.jobs, [&](const CbvTerm& p, ars::CheckReport& r) {
    const Com c = kernelToCc(p);
    const CbvTerm back = ccToKernel(c);
    if (printCbv(back) != printCbv(p)) {
      r.fail({"round trip changes the term", {printCbv(p), printCom(c), printCbv(back)}});
      return;
    }
    std::vector<std::pair<Rule, Com>> mapped;
    for (auto& m : betaVStep(p)) mapped.push_back({Rule::BetaC, kernelToCc(m)});
    if (lab_detail::sameSteps<Com, Com>(mapped, lab_detail::coreSteps(c, {Rule::BetaC}),
                                        [](const Com& x) { return x; }))
      r.pass();
    else
      r.fail({"one-step reducts differ", {printCbv(p), printCom(c)}});
  }));

  // Call-by-value into its kernel.
  const auto cbv = enumerateCbv(cfg.cbvMax, z);
  auto sim = lab_detail::report("call-by-value embeds into the kernel with step simulation", cfg);
  sim.universe = "call-by-value terms <= " + std::to_string(cfg.cbvMax) + " nodes over " + cfg.universe.freeVar;
  const auto kernelStep = betaVStepFn();
  out.push_back(ars::overUniverse(sim, cbv, cfg.jobs, [&](const CbvTerm& p, ars::CheckReport& r) {
    const CbvTerm ep = cbvEmbed(p);
    if (!sorts::kernelComputation(ep.tree)) {
      r.fail({"image is not a kernel term", {printCbv(p), printCbv(ep)}});
      return;
    }
    const auto succ = betaVStep(p);
    if (succ.empty()) return;
    std::vector<CbvTerm> firstSteps = betaVStep(ep);
    const auto g = ars::ReductionGraph<CbvTerm, Rule>::explore(firstSteps, kernelStep, cfg.join);
    for (const CbvTerm& q : succ) {
      if (g.contains(cbvEmbed(q))) r.pass();
      else if (g.truncated()) r.undecided();
      else r.fail({"no kernel reduction to the image of the reduct", {printCbv(p), printCbv(q), printCbv(ep)}});
    }
  }));

  // Let-notation, from the let side: P converts to [<<P>>].
  const auto mls = enumerateMl(cfg.mlMax, z);
  auto mlRound = lab_detail::report("let-notation: P and [<<P>>] are convertible", cfg);
  mlRound.universe = "let-notation terms <= " + std::to_string(cfg.mlMax) + " nodes over " + cfg.universe.freeVar;
  out.push_back(ars::overUniverse(mlRound, mls, cfg.jobs, [&](const MlTerm& p, ars::CheckReport& r) {
    const MlTerm back = ccToMl(mlToCc(p));
    switch (boundedConvertible(p, back, cfg.convert)) {
      case Truth::True: r.pass(); break;
      case Truth::Unknown: r.undecided(); break;
      case Truth::False: r.fail({"not convertible", {printMl(p), printMl(back)}}); break;
    }
  }));

  // Let-notation, from the core side: M converts to <<[M]>> with eta.
  out.push_back(ars::overUniverse(
      lab_detail::report("let-notation: M and <<[M]>> are convertible with eta", cfg), universe, cfg.jobs,
      [&](const Com& t, ars::CheckReport& r) {
        const Com back = mlToCc(ccToMl(t));
        switch (boundedConvertible(t, back, RuleSet::withEta(), cfg.convert)) {
          case Truth::True: r.pass(); break;
          case Truth::Unknown: r.undecided(); break;
          case Truth::False: r.fail({"not convertible", {printCom(t), printCom(back)}}); break;
        }
      }));

  // The syntactic round trip is the identity exactly when no x M subterm
  // (M not a return) occurs.
  out.push_back(ars::overUniverse(
      lab_detail::report("let-notation: syntactic round trip without x M subterms", cfg), universe, cfg.jobs,
      [&](const Com& t, ars::CheckReport& r) {
        if (lab_detail::hasVarApp(t)) return;
        const Com back = mlToCc(ccToMl(t));
        if (back == t) r.pass();
        else r.fail({"round trip changes the term", {printCom(t), printCom(back)}});
      }));
  out.push_back(ars::overUniverse(
      lab_detail::report("let-notation: syntactic round trip on x M subterms (expected to fail)", cfg, true),
      universe, cfg.jobs, [&](const Com& t, ars::CheckReport& r) {
        if (!lab_detail::hasVarApp(t)) return;
        const Com back = mlToCc(ccToMl(t));
        if (back == t) r.pass();
        else r.fail({"round trip changes the term", {printCom(t), printCom(back)}});
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch by name

inline const std::vector<std::string>& propertyNames() {
  static const std::vector<std::string> names = {
      "surface-fact", "weak-fact",        "iota-postpone",     "uniform-norm", "measure-descent",
      "return-value", "iota-irrelevance", "confluence-matrix", "translations", "adequacy"};
  return names;
}

// nullopt for an unknown property name.
inline std::optional<std::vector<ars::CheckReport>> runProperty(const std::string& name,
                                                                const std::vector<Com>& universe,
                                                                const LabConfig& cfg) {
  if (name == "surface-fact") return std::vector<ars::CheckReport>{checkSurfaceFactorization(universe, cfg)};
  if (name == "weak-fact")
    return std::vector<ars::CheckReport>{checkWeakFactorizationCore(universe, cfg),
                                         checkWeakFactorizationCounted(universe, cfg)};
  if (name == "iota-postpone") return std::vector<ars::CheckReport>{checkIotaPostponement(universe, cfg)};
  if (name == "uniform-norm") return checkUniformNormalization(universe, cfg);
  if (name == "measure-descent") return checkMeasureDescent(universe, cfg);
  if (name == "return-value") return checkReturnValue(universe, cfg);
  if (name == "iota-irrelevance") return checkNormalization(universe, cfg);
  if (name == "confluence-matrix") return checkConfluenceMatrix(universe, cfg);
  if (name == "translations") return checkTranslations(universe, cfg);
  if (name == "adequacy") return std::vector<ars::CheckReport>{checkAdequacy(universe, cfg)};
  return std::nullopt;
}

}  // namespace lambdacc
