#pragma once

// Step functions over core terms, in the shape the ars layer expects.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "lambdacc/ars.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/term.hpp"

namespace lambdacc {

using ComStep = ars::StepFn<Com, RedexOccurrence>;

// Reduction of `rules` under `cls` contexts.
inline ComStep comStep(ClosureClass cls, RuleSet rules) {
  return [cls, rules](const Com& t) {
    std::vector<ars::Transition<Com, RedexOccurrence>> out;
    for (auto& r : reducts(t, cls, rules)) out.push_back({std::move(r.redex), std::move(r.result)});
    return out;
  };
}

// Steps of `rules` under `outer` contexts whose path is not an `inner`
// context: surface-but-not-weak, full-but-not-surface, and so on.
inline ComStep comStepOutside(ClosureClass outer, ClosureClass inner, RuleSet rules) {
  return [outer, inner, rules](const Com& t) {
    std::vector<ars::Transition<Com, RedexOccurrence>> out;
    for (auto& r : reducts(t, outer, rules))
      if (!pathIn(r.redex.path, inner)) out.push_back({std::move(r.redex), std::move(r.result)});
    return out;
  };
}

// A term paired with the number of beta_c steps taken to reach it.
struct Counted {
  Com term;
  std::size_t betaC = 0;

  friend bool operator==(const Counted& a, const Counted& b) { return a.betaC == b.betaC && a.term == b.term; }
};

inline ars::StepFn<Counted, RedexOccurrence> counting(ComStep step) {
  return [step = std::move(step)](const Counted& c) {
    std::vector<ars::Transition<Counted, RedexOccurrence>> out;
    for (auto& tr : step(c.term)) {
      const std::size_t k = c.betaC + (tr.label.rule == Rule::BetaC ? 1 : 0);
      out.push_back({tr.label, Counted{std::move(tr.target), k}});
    }
    return out;
  };
}

}  // namespace lambdacc

template <>
struct std::hash<lambdacc::Counted> {
  std::size_t operator()(const lambdacc::Counted& c) const noexcept {
    return lambdacc::detail::hashMix(c.term.hash(), c.betaC);
  }
};
