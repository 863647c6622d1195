#pragma once

// Root rules, contexts and one-step reduction for the computational core.
//
//   beta_c  (\x.M)!V           -> M[V/x]
//   sigma   (\y.N)((\x.M)L)    -> (\x.(\y.N)M)L
//   id      (\x.!x)M           -> M
//   iota    id, when M is not of the form !V
//   eta     \x.(V!x)           -> V          (on values, x not free in V)

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambdacc/term.hpp"

namespace lambdacc {

enum class Rule : std::uint8_t { BetaC, Sigma, Id, Iota, Eta };
inline constexpr std::size_t kRuleCount = 5;
inline constexpr std::array<Rule, kRuleCount> kAllRules = {Rule::BetaC, Rule::Sigma, Rule::Id, Rule::Iota,
                                                          Rule::Eta};

inline const char* ruleName(Rule r) {
  switch (r) {
    case Rule::BetaC: return "beta_c";
    case Rule::Sigma: return "sigma";
    case Rule::Id: return "id";
    case Rule::Iota: return "iota";
    case Rule::Eta: return "eta";
  }
  return "?";
}

inline std::optional<Rule> ruleFromName(const std::string& s) {
  for (Rule r : kAllRules)
    if (s == ruleName(r)) return r;
  if (s == "beta" || s == "betac") return Rule::BetaC;
  return std::nullopt;
}

class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr RuleSet(std::initializer_list<Rule> rules) {
    for (Rule r : rules) bits_ |= bit(r);
  }

  constexpr bool has(Rule r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr RuleSet with(Rule r) const { return fromBits(bits_ | bit(r)); }
  constexpr RuleSet operator|(RuleSet o) const { return fromBits(bits_ | o.bits_); }
  constexpr bool operator==(const RuleSet&) const = default;

  // The reduction of the calculus: beta_c, sigma, id.
  static constexpr RuleSet core() { return {Rule::BetaC, Rule::Sigma, Rule::Id}; }
  static constexpr RuleSet sigmaBetaC() { return {Rule::BetaC, Rule::Sigma}; }
  // core() with iota listed separately; id matches that are iota show up twice.
  static constexpr RuleSet all() { return {Rule::BetaC, Rule::Sigma, Rule::Id, Rule::Iota}; }
  static constexpr RuleSet withEta() { return {Rule::BetaC, Rule::Sigma, Rule::Id, Rule::Eta}; }

 private:
  static constexpr std::uint8_t bit(Rule r) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r)); }
  static constexpr RuleSet fromBits(std::uint8_t b) {
    RuleSet s;
    s.bits_ = b;
    return s;
  }
  std::uint8_t bits_ = 0;
};

// ---------------------------------------------------------------------------
// Root steps

namespace detail {

inline bool isIdentity(const Val& v) {
  return v.isAbs() && v.body().isRet() && v.body().value().isBound() && v.body().value().index() == 0;
}

// \x.(V!x) with x not free in V, answered as V with the binder removed.
inline std::optional<Val> etaContract(const Val& v) {
  if (!v.isAbs()) return std::nullopt;
  const Com& b = v.body();
  if (!b.isApp() || !b.arg().isRet()) return std::nullopt;
  const Val& x = b.arg().value();
  if (!x.isBound() || x.index() != 0) return std::nullopt;
  if (mentions(b.fun(), 0)) return std::nullopt;
  // Dropping an unused binder: lower every loose index by one.
  return instantiate(b.fun(), Val::bound(0), 0);
}

}  // namespace detail

// Contracts `t` at the root with `rule`; nullopt when it does not match.
// Eta rewrites the value held directly by `t` (the returned value of a Ret,
// the function of an App).
inline std::optional<Com> rootStep(Rule rule, const Com& t) {
  switch (rule) {
    case Rule::BetaC:
      if (t.isApp() && t.fun().isAbs() && t.arg().isRet()) return instantiate(t.fun().body(), t.arg().value());
      return std::nullopt;
    case Rule::Sigma: {
      if (!t.isApp() || !t.fun().isAbs()) return std::nullopt;
      const Com& inner = t.arg();
      if (!inner.isApp() || !inner.fun().isAbs()) return std::nullopt;
      // No renaming needed: x cannot occur in N once N moves under \x.
      const Val& outerFun = t.fun();
      const Val& innerFun = inner.fun();
      Val moved = Val::abs(outerFun.name(), shift(outerFun.body(), 1, 1));
      return Com::app(Val::abs(innerFun.name(), Com::app(std::move(moved), innerFun.body())), inner.arg());
    }
    case Rule::Id:
      if (t.isApp() && detail::isIdentity(t.fun())) return t.arg();
      return std::nullopt;
    case Rule::Iota:
      if (t.isApp() && detail::isIdentity(t.fun()) && !t.arg().isRet()) return t.arg();
      return std::nullopt;
    case Rule::Eta: {
      auto v = detail::etaContract(t.value());
      if (!v) return std::nullopt;
      return t.isRet() ? Com::ret(std::move(*v)) : Com::app(std::move(*v), t.arg());
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Paths and contexts

// Enumerator order is the left-to-right reading order, so sorting paths
// lexicographically lists redexes leftmost-outermost.
enum class PathToken : std::uint8_t { RetBody, FunBody, AppArg };

inline const char* pathTokenName(PathToken p) {
  switch (p) {
    case PathToken::RetBody: return "ret_body";
    case PathToken::FunBody: return "fun_body";
    case PathToken::AppArg: return "app_arg";
  }
  return "?";
}

using Path = std::vector<PathToken>;

enum class ClosureClass : std::uint8_t { Full, Surface, Weak };

inline const char* closureName(ClosureClass c) {
  switch (c) {
    case ClosureClass::Full: return "full";
    case ClosureClass::Surface: return "surface";
    case ClosureClass::Weak: return "weak";
  }
  return "?";
}

inline bool allows(ClosureClass cls, PathToken p) {
  switch (cls) {
    case ClosureClass::Full: return true;
    case ClosureClass::Surface: return p != PathToken::RetBody;
    case ClosureClass::Weak: return p == PathToken::AppArg;
  }
  return false;
}

// The narrowest class whose context grammar produces `path`.
inline ClosureClass classify(const Path& path) {
  bool weak = true;
  for (PathToken p : path) {
    if (p == PathToken::RetBody) return ClosureClass::Full;
    if (p != PathToken::AppArg) weak = false;
  }
  return weak ? ClosureClass::Weak : ClosureClass::Surface;
}

inline bool pathIn(const Path& path, ClosureClass cls) {
  for (PathToken p : path)
    if (!allows(cls, p)) return false;
  return true;
}

inline std::optional<Com> child(const Com& t, PathToken p) {
  switch (p) {
    case PathToken::RetBody:
      if (t.isRet() && t.value().isAbs()) return t.value().body();
      return std::nullopt;
    case PathToken::FunBody:
      if (t.isApp() && t.fun().isAbs()) return t.fun().body();
      return std::nullopt;
    case PathToken::AppArg:
      if (t.isApp()) return t.arg();
      return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<Com> subtermAt(const Com& t, const Path& path) {
  std::optional<Com> cur = t;
  for (PathToken p : path) {
    cur = child(*cur, p);
    if (!cur) return std::nullopt;
  }
  return cur;
}

namespace detail {

template <class F>
std::optional<Com> replaceAt(const Com& t, const Path& path, std::size_t i, F& f) {
  if (i == path.size()) return f(t);
  auto sub = child(t, path[i]);
  if (!sub) return std::nullopt;
  auto next = replaceAt(*sub, path, i + 1, f);
  if (!next) return std::nullopt;
  switch (path[i]) {
    case PathToken::RetBody: return Com::ret(Val::abs(t.value().name(), std::move(*next)));
    case PathToken::FunBody: return Com::app(Val::abs(t.fun().name(), std::move(*next)), t.arg());
    case PathToken::AppArg: return Com::app(t.fun(), std::move(*next));
  }
  return std::nullopt;
}

}  // namespace detail

// Rebuilds `t` with `f` applied at `path`; f returns optional<Com>.
template <class F>
std::optional<Com> replaceAt(const Com& t, const Path& path, F f) {
  return detail::replaceAt(t, path, 0, f);
}

// ---------------------------------------------------------------------------
// Redex occurrences

struct RedexOccurrence {
  Path path;
  Rule rule{};

  ClosureClass closure() const { return classify(path); }
  bool operator==(const RedexOccurrence&) const = default;
};

namespace detail {

inline void collectRedexes(const Com& t, ClosureClass cls, RuleSet rules, Path& path,
                           std::vector<RedexOccurrence>& out) {
  for (Rule r : kAllRules)
    if (rules.has(r) && rootStep(r, t)) out.push_back({path, r});
  for (PathToken p : {PathToken::RetBody, PathToken::FunBody, PathToken::AppArg}) {
    if (!allows(cls, p)) continue;
    auto sub = child(t, p);
    if (!sub) continue;
    path.push_back(p);
    collectRedexes(*sub, cls, rules, path, out);
    path.pop_back();
  }
}

inline bool hasRedex(const Com& t, ClosureClass cls, RuleSet rules) {
  for (Rule r : kAllRules)
    if (rules.has(r) && rootStep(r, t)) return true;
  for (PathToken p : {PathToken::RetBody, PathToken::FunBody, PathToken::AppArg}) {
    if (!allows(cls, p)) continue;
    auto sub = child(t, p);
    if (sub && hasRedex(*sub, cls, rules)) return true;
  }
  return false;
}

}  // namespace detail

// Every redex of `t` reachable through `cls` contexts, leftmost-outermost,
// rules in enumerator order at each position.
inline std::vector<RedexOccurrence> enumerateRedexes(const Com& t, ClosureClass cls, RuleSet rules) {
  std::vector<RedexOccurrence> out;
  Path path;
  detail::collectRedexes(t, cls, rules, path, out);
  return out;
}

inline bool isNormal(const Com& t, ClosureClass cls, RuleSet rules) { return !detail::hasRedex(t, cls, rules); }

class InvalidOccurrence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Com applyRedex(const Com& t, const RedexOccurrence& r) {
  auto out = replaceAt(t, r.path, [&](const Com& sub) { return rootStep(r.rule, sub); });
  if (!out) throw InvalidOccurrence(std::string("no ") + ruleName(r.rule) + " redex at the given path");
  return *out;
}

struct Reduct {
  RedexOccurrence redex;
  Com result;
};

inline std::vector<Reduct> reducts(const Com& t, ClosureClass cls, RuleSet rules) {
  std::vector<Reduct> out;
  for (auto& r : enumerateRedexes(t, cls, rules)) {
    Com s = applyRedex(t, r);
    out.push_back({std::move(r), std::move(s)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Traces

enum class Status : std::uint8_t { NormalForm, Cycle, FuelExhausted };

inline const char* statusName(Status s) {
  switch (s) {
    case Status::NormalForm: return "normal_form";
    case Status::Cycle: return "cycle";
    case Status::FuelExhausted: return "fuel_exhausted";
  }
  return "?";
}

struct TraceStep {
  RedexOccurrence redex;
  Com result;
};

class Trace {
 public:
  explicit Trace(Com initial) : initial_(std::move(initial)) {}

  void push(RedexOccurrence r, Com result) {
    ++counts_[static_cast<std::size_t>(r.rule)];
    steps_.push_back({std::move(r), std::move(result)});
  }

  const Com& initial() const { return initial_; }
  const Com& last() const { return steps_.empty() ? initial_ : steps_.back().result; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  std::size_t count(Rule r) const { return counts_[static_cast<std::size_t>(r)]; }
  std::size_t betaCount() const { return count(Rule::BetaC); }

  Status status() const { return status_; }
  void setStatus(Status s) { status_ = s; }

 private:
  Com initial_;
  std::vector<TraceStep> steps_;
  std::array<std::size_t, kRuleCount> counts_{};
  Status status_ = Status::NormalForm;
};

}  // namespace lambdacc
