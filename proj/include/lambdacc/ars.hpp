#pragma once

// Bounded analysis of abstract rewriting systems given by a step function.
// Terms only need operator== and std::hash; graphs are keyed by them, so
// they are quotiented by whatever equality the term type provides.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lambdacc::ars {

template <class Term, class Label>
struct Transition {
  Label label;
  Term target;
};

template <class Term, class Label>
using StepFn = std::function<std::vector<Transition<Term, Label>>(const Term&)>;

template <class Term, class Label>
StepFn<Term, Label> unite(StepFn<Term, Label> a, StepFn<Term, Label> b) {
  return [a = std::move(a), b = std::move(b)](const Term& t) {
    auto out = a(t);
    auto more = b(t);
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    return out;
  };
}

struct Bounds {
  std::size_t depth = 4;
  std::size_t maxNodes = 20000;
};

template <class Term, class Label>
class ReductionGraph {
 public:
  struct Edge {
    Label label;
    std::size_t to;
  };

  std::size_t size() const { return nodes_.size(); }
  const Term& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Term>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges(std::size_t i) const { return edges_[i]; }
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  // Known to have no successor.
  bool isNormal(std::size_t i) const { return normal_[i]; }
  bool expanded(std::size_t i) const { return expanded_[i]; }
  // Some node at the depth bound still had successors, or the node cap hit.
  bool truncated() const { return truncated_; }

  std::optional<std::size_t> indexOf(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Term& t) const { return index_.count(t) > 0; }

  std::vector<std::size_t> normalForms() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (normal_[i]) out.push_back(i);
    return out;
  }

  template <class Pred>
  std::optional<std::size_t> findNode(Pred p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (p(nodes_[i])) return i;
    return std::nullopt;
  }

  // Breadth-first exploration from every start, each at depth 0.
  static ReductionGraph explore(const std::vector<Term>& starts, const StepFn<Term, Label>& step, Bounds b) {
    ReductionGraph g;
    std::deque<std::size_t> queue;
    for (const Term& s : starts) {
      auto [idx, fresh] = g.add(s, 0, b.maxNodes);
      if (fresh) queue.push_back(idx);
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      auto succ = step(g.nodes_[i]);
      g.normal_[i] = succ.empty();
      if (g.depth_[i] >= b.depth) {
        if (!succ.empty()) g.truncated_ = true;
        continue;
      }
      g.expanded_[i] = true;
      for (auto& tr : succ) {
        auto [j, fresh] = g.add(std::move(tr.target), g.depth_[i] + 1, b.maxNodes);
        if (j == kNone) {
          g.truncated_ = true;
          continue;
        }
        g.edges_[i].push_back({std::move(tr.label), j});
        if (fresh) queue.push_back(j);
      }
    }
    return g;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::pair<std::size_t, bool> add(Term t, std::size_t d, std::size_t cap) {
    auto it = index_.find(t);
    if (it != index_.end()) return {it->second, false};
    if (nodes_.size() >= cap) return {kNone, false};
    const std::size_t i = nodes_.size();
    index_.emplace(t, i);
    nodes_.push_back(std::move(t));
    edges_.emplace_back();
    depth_.push_back(d);
    normal_.push_back(false);
    expanded_.push_back(false);
    return {i, true};
  }

  std::vector<Term> nodes_;
  std::unordered_map<Term, std::size_t> index_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::size_t> depth_;
  std::vector<bool> normal_;
  std::vector<bool> expanded_;
  bool truncated_ = false;
};

template <class Term, class Label>
ReductionGraph<Term, Label> reachable(const Term& t, const StepFn<Term, Label>& step, Bounds b) {
  return ReductionGraph<Term, Label>::explore({t}, step, b);
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { Pass, Fail, Unknown };

inline const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct Witness {
  std::string note;
  std::vector<std::string> terms;
};

struct CheckReport {
  std::string property;
  std::string universe;
  bool expectFailure = false;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unknown = 0;
  std::vector<Witness> witnesses;
  std::size_t maxWitnesses = 5;

  Verdict verdict() const {
    if (failed > 0) return Verdict::Fail;
    if (unknown > 0) return Verdict::Unknown;
    return Verdict::Pass;
  }

  // A property expected to fail is fine only when a failure was found; any
  // other property is fine unless it failed.
  bool ok() const { return expectFailure ? verdict() == Verdict::Fail : verdict() != Verdict::Fail; }

  double unknownRate() const { return instances == 0 ? 0.0 : static_cast<double>(unknown) / instances; }

  void pass() {
    ++instances;
    ++passed;
  }
  void undecided() {
    ++instances;
    ++unknown;
  }
  void fail(Witness w) {
    ++instances;
    ++failed;
    if (witnesses.size() < maxWitnesses) witnesses.push_back(std::move(w));
  }

  void merge(const CheckReport& o) {
    instances += o.instances;
    passed += o.passed;
    failed += o.failed;
    unknown += o.unknown;
    for (const auto& w : o.witnesses)
      if (witnesses.size() < maxWitnesses) witnesses.push_back(w);
  }

  nlohmann::ordered_json toJson() const {
    nlohmann::ordered_json j;
    j["property"] = property;
    j["universe"] = universe;
    j["verdict"] = verdictName(verdict());
    j["expected"] = expectFailure ? "fail" : "pass";
    j["ok"] = ok();
    j["instances"] = instances;
    j["passed"] = passed;
    j["failed"] = failed;
    j["unknown"] = unknown;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) ws.push_back({{"note", w.note}, {"terms", w.terms}});
    j["witnesses"] = std::move(ws);
    return j;
  }
};

// Runs fn(i) for i in [0, n) on `jobs` threads and returns the results in
// index order, so the merged output does not depend on scheduling.
template <class R, class F>
std::vector<R> parallelMap(std::size_t n, std::size_t jobs, F fn) {
  std::vector<R> out(n);
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += jobs) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

// Applies a per-term check to every universe term and merges in order.
template <class Term, class F>
CheckReport overUniverse(CheckReport base, const std::vector<Term>& universe, std::size_t jobs, F perTerm) {
  auto parts = parallelMap<CheckReport>(universe.size(), jobs, [&](std::size_t i) {
    CheckReport r;
    r.maxWitnesses = base.maxWitnesses;
    perTerm(universe[i], r);
    return r;
  });
  for (const auto& p : parts) base.merge(p);
  return base;
}

template <class Term>
using Printer = std::function<std::string(const Term&)>;

// ---------------------------------------------------------------------------
// Checks on a single start term. Each adds its instances to `rep`.

// Every endpoint N of an (e + i)-sequence of length <= seqLen from t must be
// reachable as t ->e* U ->i* N within the given bounds.
template <class Term, class Label>
void checkFactorization(const Term& t, const StepFn<Term, Label>& eStep, const StepFn<Term, Label>& iStep,
                        std::size_t seqLen, Bounds eBounds, Bounds iBounds, const Printer<Term>& show,
                        CheckReport& rep) {
  const auto mixed = reachable(t, unite(eStep, iStep), Bounds{seqLen, eBounds.maxNodes});
  const auto ext = reachable(t, eStep, eBounds);
  const auto both = ReductionGraph<Term, Label>::explore(ext.nodes(), iStep, iBounds);
  for (const Term& n : mixed.nodes()) {
    if (both.contains(n)) {
      rep.pass();
    } else if (ext.truncated() || both.truncated()) {
      rep.undecided();
    } else {
      rep.fail({"no e-then-i reordering reaches the endpoint", {show(t), show(n)}});
    }
  }
}

// Joinability within `b` of the two endpoints.
template <class Term, class Label>
Verdict joinable(const Term& a, const Term& b, const StepFn<Term, Label>& stepA, const StepFn<Term, Label>& stepB,
                 Bounds bounds) {
  if (a == b) return Verdict::Pass;
  const auto ga = reachable(a, stepA, bounds);
  const auto gb = reachable(b, stepB, bounds);
  for (const Term& n : ga.nodes())
    if (gb.contains(n)) return Verdict::Pass;
  return (ga.truncated() || gb.truncated()) ? Verdict::Unknown : Verdict::Fail;
}

inline void recordJoin(Verdict v, const char* note, std::vector<std::string> terms, CheckReport& rep) {
  switch (v) {
    case Verdict::Pass: rep.pass(); break;
    case Verdict::Unknown: rep.undecided(); break;
    case Verdict::Fail: rep.fail({note, std::move(terms)}); break;
  }
}

// Every peak a <- t -> b joins within `join`.
template <class Term, class Label>
void checkLocalConfluence(const Term& t, const StepFn<Term, Label>& step, Bounds join, const Printer<Term>& show,
                          CheckReport& rep) {
  const auto succ = step(t);
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (std::size_t j = i + 1; j < succ.size(); ++j) {
      const Term& a = succ[i].target;
      const Term& b = succ[j].target;
      recordJoin(joinable(a, b, step, step, join), "peak does not join",
                              {show(t), show(a), show(b)}, rep);
    }
}

// Every peak a <- t -> b has a = b or a common one-step reduct.
template <class Term, class Label>
void checkQuasiDiamond(const Term& t, const StepFn<Term, Label>& step, const Printer<Term>& show,
                       CheckReport& rep) {
  const auto succ = step(t);
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (std::size_t j = i + 1; j < succ.size(); ++j) {
      const Term& a = succ[i].target;
      const Term& b = succ[j].target;
      if (a == b) {
        rep.pass();
        continue;
      }
      std::unordered_set<Term> fromA;
      for (auto& s : step(a)) fromA.insert(s.target);
      bool met = false;
      for (auto& s : step(b))
        if (fromA.count(s.target)) {
          met = true;
          break;
        }
      if (met) rep.pass();
      else rep.fail({"peak has no one-step join", {show(t), show(a), show(b)}});
    }
}

// Every peak a <-1 t ->2 b closes as a ->2* d <-1* b within `join`.
template <class Term, class Label>
void checkCommutation(const Term& t, const StepFn<Term, Label>& step1, const StepFn<Term, Label>& step2,
                      Bounds join, const Printer<Term>& show, CheckReport& rep) {
  const auto left = step1(t);
  const auto right = step2(t);
  for (const auto& l : left)
    for (const auto& r : right)
      recordJoin(joinable(l.target, r.target, step2, step1, join), "peak does not commute",
                              {show(t), show(l.target), show(r.target)}, rep);
}

// t ->i u ->e v implies t ->e* w ->i= v, with the e-sequence bounded by `eb`.
template <class Term, class Label>
void checkStrongPostponement(const Term& t, const StepFn<Term, Label>& eStep, const StepFn<Term, Label>& iStep,
                             Bounds eb, const Printer<Term>& show, CheckReport& rep) {
  const auto isteps = iStep(t);
  if (isteps.empty()) return;
  const auto ext = reachable(t, eStep, eb);
  std::unordered_set<Term> closing(ext.nodes().begin(), ext.nodes().end());
  for (const Term& w : ext.nodes())
    for (auto& s : iStep(w)) closing.insert(s.target);
  for (const auto& u : isteps)
    for (const auto& v : eStep(u.target)) {
      if (closing.count(v.target)) rep.pass();
      else if (ext.truncated()) rep.undecided();
      else rep.fail({"i-step then e-step cannot be reordered", {show(t), show(u.target), show(v.target)}});
    }
}

}  // namespace lambdacc::ars
