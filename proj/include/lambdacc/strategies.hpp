#pragma once

// Reduction drivers. Each one records a Trace and stops at a normal form, on
// revisiting a term (Cycle), or when the fuel runs out.

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lambdacc/rewrite.hpp"
#include "lambdacc/term.hpp"

namespace lambdacc {

struct Fuel {
  std::size_t maxSteps = 1000;

  // 1000, or LAMBDACC_FUEL when it holds a positive integer.
  static Fuel fromEnv() {
    Fuel f;
    if (const char* s = std::getenv("LAMBDACC_FUEL")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) f.maxSteps = static_cast<std::size_t>(v);
    }
    return f;
  }
};

struct Outcome {
  Status status;
  Com term;  // the normal form, the repeated term, or the last term reached
  Trace trace;

  bool normal() const { return status == Status::NormalForm; }
  bool returnsValue() const { return normal() && term.isRet(); }
};

// Picks the next redex of the current term, or nullopt when done.
using Chooser = std::function<std::optional<RedexOccurrence>(const Com&)>;

inline Outcome drive(const Com& start, const Chooser& choose, Fuel fuel) {
  Trace trace(start);
  std::unordered_set<Com> seen{start};
  Com cur = start;
  for (;;) {
    auto r = choose(cur);
    if (!r) {
      trace.setStatus(Status::NormalForm);
      return {Status::NormalForm, cur, std::move(trace)};
    }
    if (trace.size() >= fuel.maxSteps) {
      trace.setStatus(Status::FuelExhausted);
      return {Status::FuelExhausted, cur, std::move(trace)};
    }
    Com next = applyRedex(cur, *r);
    trace.push(std::move(*r), next);
    if (!seen.insert(next).second) {
      trace.setStatus(Status::Cycle);
      return {Status::Cycle, next, std::move(trace)};
    }
    cur = std::move(next);
  }
}

inline std::optional<RedexOccurrence> firstRedex(const Com& t, ClosureClass cls, RuleSet rules) {
  auto rs = enumerateRedexes(t, cls, rules);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

// Always the leftmost-outermost redex of `rules` under `cls` contexts.
inline Outcome leftmost(const Com& t, ClosureClass cls, RuleSet rules, Fuel fuel = Fuel::fromEnv()) {
  return drive(t, [cls, rules](const Com& m) { return firstRedex(m, cls, rules); }, fuel);
}

// Weak beta_c evaluation; the weak beta_c redex is unique when it exists.
inline Outcome weakBetaC(const Com& t, Fuel fuel = Fuel::fromEnv()) {
  return drive(t, [](const Com& m) { return firstRedex(m, ClosureClass::Weak, {Rule::BetaC}); }, fuel);
}

// Root beta_c, else root sigma; never under a context.
inline Outcome rootEval(const Com& t, Fuel fuel = Fuel::fromEnv()) {
  return drive(
      t,
      [](const Com& m) -> std::optional<RedexOccurrence> {
        if (rootStep(Rule::BetaC, m)) return RedexOccurrence{{}, Rule::BetaC};
        if (rootStep(Rule::Sigma, m)) return RedexOccurrence{{}, Rule::Sigma};
        return std::nullopt;
      },
      fuel);
}

// Chooses uniformly among all redexes at every step.
inline Outcome randomMaximal(const Com& t, ClosureClass cls, RuleSet rules, std::uint64_t seed,
                             Fuel fuel = Fuel::fromEnv()) {
  std::mt19937_64 rng(seed);
  return drive(
      t,
      [&](const Com& m) -> std::optional<RedexOccurrence> {
        auto rs = enumerateRedexes(m, cls, rules);
        if (rs.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
        return rs[pick(rng)];
      },
      fuel);
}

namespace detail {

inline void prefix(RedexOccurrence& r, PathToken p) { r.path.insert(r.path.begin(), p); }

// One step of iterated e-reduction, e in {weak, surface}.
inline std::optional<RedexOccurrence> iteratedChoice(const Com& t, ClosureClass e) {
  if (auto r = firstRedex(t, e, RuleSet::sigmaBetaC())) return r;
  std::optional<RedexOccurrence> r;
  if (t.isRet()) {
    if (!t.value().isAbs()) return std::nullopt;
    r = iteratedChoice(t.value().body(), e);
    if (r) prefix(*r, PathToken::RetBody);
    return r;
  }
  if (t.fun().isAbs() && !isNormal(t.fun().body(), ClosureClass::Full, RuleSet::sigmaBetaC())) {
    r = iteratedChoice(t.fun().body(), e);
    if (r) prefix(*r, PathToken::FunBody);
    return r;
  }
  r = iteratedChoice(t.arg(), e);
  if (r) prefix(*r, PathToken::AppArg);
  return r;
}

}  // namespace detail

// Iterated weak or surface reduction over {beta_c, sigma}: contract the
// leftmost e-redex while there is one, otherwise descend left to right.
inline Outcome iteratedStrategy(const Com& t, ClosureClass e, Fuel fuel = Fuel::fromEnv()) {
  return drive(t, [e](const Com& m) { return detail::iteratedChoice(m, e); }, fuel);
}

// iteratedStrategy to a sigma/beta_c normal form, then iota steps to a
// normal form of the whole calculus.
inline Outcome normalizeFull(const Com& t, ClosureClass e, Fuel fuel = Fuel::fromEnv()) {
  bool iotaPhase = false;
  return drive(
      t,
      [&](const Com& m) -> std::optional<RedexOccurrence> {
        if (!iotaPhase) {
          if (auto r = detail::iteratedChoice(m, e)) return r;
          iotaPhase = true;
        }
        return firstRedex(m, ClosureClass::Full, {Rule::Iota});
      },
      fuel);
}

enum class Truth { False, True, Unknown };

inline const char* truthName(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

// Whether weak beta_c evaluation stops. A detected cycle is a definite no;
// running out of fuel is Unknown.
inline Truth halts(const Com& t, Fuel fuel = Fuel::fromEnv()) {
  const Outcome o = weakBetaC(t, fuel);
  switch (o.status) {
    case Status::NormalForm: return Truth::True;
    case Status::Cycle: return Truth::False;
    case Status::FuelExhausted: return Truth::Unknown;
  }
  return Truth::Unknown;
}

}  // namespace lambdacc
