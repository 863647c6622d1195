#pragma once

// Exhaustive enumeration of small terms, the substrate of every bounded
// check. Size counts variable, abstraction, application and let nodes; the
// return operator (!, [ ], unit) is free, so !z has size 1.

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lambdacc/calculi.hpp"
#include "lambdacc/named.hpp"
#include "lambdacc/term.hpp"

namespace lambdacc {

inline std::size_t nodeCount(const Com& m);

inline std::size_t nodeCount(const Val& v) { return v.isAbs() ? 1 + nodeCount(v.body()) : 1; }

inline std::size_t nodeCount(const Com& m) {
  if (m.isRet()) return nodeCount(m.value());
  return 1 + nodeCount(m.fun()) + nodeCount(m.arg());
}

namespace enum_detail {

inline std::string binderName(std::size_t depth) {
  static const char* names[] = {"x", "y", "u", "v", "w"};
  if (depth < 5) return names[depth];
  return "x" + std::to_string(depth);
}

// Terms of exactly `n` nodes with `k` enclosing binders and the given free
// variables, memoised per (n, k).
class CoreEnumerator {
 public:
  explicit CoreEnumerator(std::vector<std::string> free) : free_(std::move(free)) {}

  const std::vector<Val>& values(std::size_t n, std::size_t k) {
    auto key = std::make_pair(n, k);
    if (auto it = vals_.find(key); it != vals_.end()) return it->second;
    std::vector<Val> out;
    if (n == 1) {
      for (std::size_t i = 0; i < k; ++i) out.push_back(Val::bound(static_cast<std::uint32_t>(i)));
      for (const auto& f : free_) out.push_back(Val::free(f));
    } else if (n >= 2) {
      for (const Com& body : computations(n - 1, k + 1)) out.push_back(Val::abs(binderName(k), body));
    }
    return vals_.emplace(key, std::move(out)).first->second;
  }

  const std::vector<Com>& computations(std::size_t n, std::size_t k) {
    auto key = std::make_pair(n, k);
    if (auto it = coms_.find(key); it != coms_.end()) return it->second;
    std::vector<Com> out;
    for (const Val& v : values(n, k)) out.push_back(Com::ret(v));
    for (std::size_t a = 1; a + 2 <= n; ++a) {
      const auto& fs = values(a, k);
      const auto& ms = computations(n - 1 - a, k);
      for (const Val& f : fs)
        for (const Com& m : ms) out.push_back(Com::app(f, m));
    }
    return coms_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<std::string> free_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Val>> vals_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Com>> coms_;
};

}  // namespace enum_detail

// Every computation of 1..maxNodes nodes over `freeVars`, by increasing
// size; one representative per alpha class.
inline std::vector<Com> enumerateTerms(std::size_t maxNodes, const std::vector<std::string>& freeVars,
                                       bool closedOnly) {
  enum_detail::CoreEnumerator e(freeVars);
  std::vector<Com> out;
  for (std::size_t n = 1; n <= maxNodes; ++n)
    for (const Com& m : e.computations(n, 0))
      if (!closedOnly || isClosed(m)) out.push_back(m);
  return out;
}

struct UniverseSpec {
  std::size_t closedMax = 9;
  std::size_t openMax = 7;
  std::string freeVar = "z";

  std::string describe() const {
    return "closed terms <= " + std::to_string(closedMax) + " nodes, open terms <= " + std::to_string(openMax) +
           " nodes over " + freeVar;
  }
};

// Closed terms up to closedMax, then the terms up to openMax that mention
// the free variable.
inline std::vector<Com> buildUniverse(const UniverseSpec& spec = {}) {
  std::vector<Com> out = enumerateTerms(spec.closedMax, {}, true);
  for (const Com& m : enumerateTerms(spec.openMax, {spec.freeVar}, false))
    if (!isClosed(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Named-tree enumerators for the sibling calculi. Binders at depth d are
// named binderName(d), so distinct trees are never alpha-equivalent.

namespace enum_detail {

using named::Tree;

class MlEnumerator {
 public:
  explicit MlEnumerator(std::vector<std::string> free) : free_(std::move(free)) {}

  std::vector<Tree> values(std::size_t n, std::size_t k) {
    std::vector<Tree> out;
    if (n == 1) {
      for (std::size_t i = 0; i < k; ++i) out.push_back(Tree::var(binderName(i)));
      for (const auto& f : free_) out.push_back(Tree::var(f));
    } else if (n >= 2) {
      for (const Tree& b : computations(n - 1, k + 1)) out.push_back(Tree::lam(binderName(k), b));
    }
    return out;
  }

  std::vector<Tree> computations(std::size_t n, std::size_t k) {
    auto key = std::make_pair(n, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Tree> out;
    for (const Tree& v : values(n, k)) out.push_back(Tree::unit(v));
    for (std::size_t a = 1; a + 2 <= n; ++a)
      for (const Tree& f : values(a, k))
        for (const Tree& w : values(n - 1 - a, k)) out.push_back(Tree::app(f, w));
    for (std::size_t a = 1; a + 2 <= n; ++a)
      for (const Tree& m : computations(a, k))
        for (const Tree& body : computations(n - 1 - a, k + 1)) out.push_back(Tree::let(binderName(k), m, body));
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<std::string> free_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Tree>> memo_;
};

class CbvEnumerator {
 public:
  explicit CbvEnumerator(std::vector<std::string> free) : free_(std::move(free)) {}

  std::vector<Tree> terms(std::size_t n, std::size_t k) {
    auto key = std::make_pair(n, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Tree> out;
    if (n == 1) {
      for (std::size_t i = 0; i < k; ++i) out.push_back(Tree::var(binderName(i)));
      for (const auto& f : free_) out.push_back(Tree::var(f));
    } else {
      for (const Tree& b : terms(n - 1, k + 1)) out.push_back(Tree::lam(binderName(k), b));
      for (std::size_t a = 1; a + 2 <= n; ++a)
        for (const Tree& p : terms(a, k))
          for (const Tree& q : terms(n - 1 - a, k)) out.push_back(Tree::app(p, q));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<std::string> free_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Tree>> memo_;
};

}  // namespace enum_detail

inline std::vector<MlTerm> enumerateMl(std::size_t maxNodes, const std::vector<std::string>& freeVars) {
  enum_detail::MlEnumerator e(freeVars);
  std::vector<MlTerm> out;
  for (std::size_t n = 1; n <= maxNodes; ++n)
    for (const auto& t : e.computations(n, 0)) out.emplace_back(t);
  return out;
}

inline std::vector<CbvTerm> enumerateCbv(std::size_t maxNodes, const std::vector<std::string>& freeVars) {
  enum_detail::CbvEnumerator e(freeVars);
  std::vector<CbvTerm> out;
  for (std::size_t n = 1; n <= maxNodes; ++n)
    for (const auto& t : e.terms(n, 0)) out.emplace_back(t);
  return out;
}

}  // namespace lambdacc
