#pragma once

// Named syntax trees, shared by the sibling calculi (let-notation,
// unit/star notation, call-by-value) and by the concrete syntax of the core.
//
// Node kinds and the binding structure:
//   Var x
//   Lam x. body            binds x in body
//   Unit v                 [V], unit V, or !V depending on the calculus
//   App f a
//   Star m v               m * v
//   Let x = bound in body  binds x in body only

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambdacc/term.hpp"

namespace lambdacc::named {

enum class Kind : std::uint8_t { Var, Lam, Unit, App, Star, Let };

class Tree {
 public:
  static Tree var(std::string x) { return Tree(Kind::Var, std::move(x), {}); }
  static Tree lam(std::string x, Tree body) { return Tree(Kind::Lam, std::move(x), {std::move(body)}); }
  static Tree unit(Tree v) { return Tree(Kind::Unit, {}, {std::move(v)}); }
  static Tree app(Tree f, Tree a) { return Tree(Kind::App, {}, {std::move(f), std::move(a)}); }
  static Tree star(Tree m, Tree v) { return Tree(Kind::Star, {}, {std::move(m), std::move(v)}); }
  static Tree let(std::string x, Tree bound, Tree body) {
    return Tree(Kind::Let, std::move(x), {std::move(bound), std::move(body)});
  }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Tree& child(std::size_t i) const { return node_->kids.at(i); }
  std::size_t arity() const { return node_->kids.size(); }

  bool is(Kind k) const { return kind() == k; }
  bool isValue() const { return kind() == Kind::Var || kind() == Kind::Lam; }

  Tree withChildren(std::vector<Tree> kids) const { return Tree(kind(), name(), std::move(kids)); }
  Tree withName(std::string x) const { return Tree(kind(), std::move(x), node_->kids); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Tree> kids;
  };
  Tree(Kind k, std::string name, std::vector<Tree> kids)
      : node_(std::make_shared<const Node>(Node{k, std::move(name), std::move(kids)})) {}
  std::shared_ptr<const Node> node_;
};

// Index of the child that the node's binder scopes over, or -1.
inline int boundChild(const Tree& t) {
  if (t.is(Kind::Lam)) return 0;
  if (t.is(Kind::Let)) return 1;
  return -1;
}

inline void collectFreeVars(const Tree& t, std::set<std::string>& out) {
  if (t.is(Kind::Var)) {
    out.insert(t.name());
    return;
  }
  const int scoped = boundChild(t);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (static_cast<int>(i) == scoped) {
      std::set<std::string> inner;
      collectFreeVars(t.child(i), inner);
      inner.erase(t.name());
      out.insert(inner.begin(), inner.end());
    } else {
      collectFreeVars(t.child(i), out);
    }
  }
}

inline std::set<std::string> freeVars(const Tree& t) {
  std::set<std::string> out;
  collectFreeVars(t, out);
  return out;
}

// `hint`, or `hint` followed by the smallest counter that avoids `taken`.
inline std::string freshName(const std::string& hint, const std::set<std::string>& taken) {
  if (!taken.count(hint)) return hint;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = hint + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

// Capture-avoiding t[v/x].
inline Tree substitute(const Tree& t, const std::string& x, const Tree& v) {
  if (t.is(Kind::Var)) return t.name() == x ? v : t;
  const int scoped = boundChild(t);
  std::vector<Tree> kids;
  kids.reserve(t.arity());
  std::string binder = t.name();
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (static_cast<int>(i) != scoped) {
      kids.push_back(substitute(t.child(i), x, v));
      continue;
    }
    const Tree& body = t.child(i);
    if (binder == x) {
      kids.push_back(body);
      continue;
    }
    const std::set<std::string> fvV = freeVars(v);
    if (fvV.count(binder)) {
      std::set<std::string> taken = fvV;
      const auto fvBody = freeVars(body);
      taken.insert(fvBody.begin(), fvBody.end());
      taken.insert(x);
      const std::string renamed = freshName(binder, taken);
      kids.push_back(substitute(substitute(body, binder, Tree::var(renamed)), x, v));
      binder = renamed;
    } else {
      kids.push_back(substitute(body, x, v));
    }
  }
  return Tree(t).withChildren(std::move(kids)).withName(binder);
}

// Renames the binder of a Lam/Let node, avoiding capture in its scope.
inline Tree renameBinder(const Tree& t, const std::string& to) {
  const int scoped = boundChild(t);
  if (scoped < 0 || t.name() == to) return t;
  std::vector<Tree> kids;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    kids.push_back(static_cast<int>(i) == scoped ? substitute(t.child(i), t.name(), Tree::var(to))
                                                 : t.child(i));
  }
  return t.withChildren(std::move(kids)).withName(to);
}

namespace detail {

// Alpha-aware comparison with binder environments.
inline bool alphaEqEnv(const Tree& a, const Tree& b, std::vector<std::string>& envA,
                       std::vector<std::string>& envB) {
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (a.is(Kind::Var)) {
    auto lookup = [](const std::vector<std::string>& env, const std::string& x) -> long {
      for (std::size_t i = env.size(); i-- > 0;)
        if (env[i] == x) return static_cast<long>(env.size() - 1 - i);
      return -1;
    };
    const long ia = lookup(envA, a.name());
    const long ib = lookup(envB, b.name());
    if (ia != ib) return false;
    return ia >= 0 || a.name() == b.name();
  }
  const int scoped = boundChild(a);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (static_cast<int>(i) == scoped) {
      envA.push_back(a.name());
      envB.push_back(b.name());
      const bool ok = alphaEqEnv(a.child(i), b.child(i), envA, envB);
      envA.pop_back();
      envB.pop_back();
      if (!ok) return false;
    } else if (!alphaEqEnv(a.child(i), b.child(i), envA, envB)) {
      return false;
    }
  }
  return true;
}

inline std::size_t alphaHashEnv(const Tree& t, std::vector<std::string>& env) {
  using lambdacc::detail::hashMix;
  std::size_t h = hashMix(0x70, static_cast<std::size_t>(t.kind()));
  if (t.is(Kind::Var)) {
    for (std::size_t i = env.size(); i-- > 0;)
      if (env[i] == t.name()) return hashMix(h, env.size() - 1 - i);
    return hashMix(h, std::hash<std::string>{}(t.name()));
  }
  const int scoped = boundChild(t);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (static_cast<int>(i) == scoped) env.push_back(t.name());
    h = hashMix(h, alphaHashEnv(t.child(i), env));
    if (static_cast<int>(i) == scoped) env.pop_back();
  }
  return h;
}

}  // namespace detail

inline bool alphaEq(const Tree& a, const Tree& b) {
  std::vector<std::string> envA, envB;
  return detail::alphaEqEnv(a, b, envA, envB);
}

inline std::size_t alphaHash(const Tree& t) {
  std::vector<std::string> env;
  return detail::alphaHashEnv(t, env);
}

// Number of Var, Lam, App, Star and Let nodes; Unit is free.
inline std::size_t nodeCount(const Tree& t) {
  std::size_t n = t.is(Kind::Unit) ? 0 : 1;
  for (std::size_t i = 0; i < t.arity(); ++i) n += nodeCount(t.child(i));
  return n;
}

// ---------------------------------------------------------------------------
// Bridges to the nameless core representation. The core syntax maps onto
// Var / Lam / Unit (for !) / App.

namespace detail {

inline void usedNames(const Val& v, std::uint32_t depth, const std::vector<std::string>& env,
                      std::set<std::string>& out);
inline void usedNames(const Com& m, std::uint32_t depth, const std::vector<std::string>& env,
                      std::set<std::string>& out);

// Names visible from inside a subterm that sits `depth` binders below the
// point where `env` applies, excluding those local binders themselves.
inline void usedNames(const Val& v, std::uint32_t depth, const std::vector<std::string>& env,
                      std::set<std::string>& out) {
  switch (v.kind()) {
    case Val::Kind::Free: out.insert(v.name()); break;
    case Val::Kind::Bound:
      if (v.index() >= depth) {
        const std::size_t outer = v.index() - depth;
        if (outer < env.size()) out.insert(env[env.size() - 1 - outer]);
      }
      break;
    case Val::Kind::Abs: usedNames(v.body(), depth + 1, env, out); break;
  }
}

inline void usedNames(const Com& m, std::uint32_t depth, const std::vector<std::string>& env,
                      std::set<std::string>& out) {
  usedNames(m.value(), depth, env, out);
  if (m.isApp()) usedNames(m.arg(), depth, env, out);
}

inline Tree fromVal(const Val& v, std::vector<std::string>& env);
inline Tree fromCom(const Com& m, std::vector<std::string>& env);

inline Tree fromVal(const Val& v, std::vector<std::string>& env) {
  switch (v.kind()) {
    case Val::Kind::Free: return Tree::var(v.name());
    case Val::Kind::Bound: {
      if (v.index() >= env.size()) return Tree::var("#" + std::to_string(v.index() - env.size()));
      return Tree::var(env[env.size() - 1 - v.index()]);
    }
    case Val::Kind::Abs: {
      // Names the body can see, other than this binder.
      std::set<std::string> taken;
      usedNames(v.body(), 1, env, taken);
      const std::string hint = v.name().empty() ? std::string("x") : v.name();
      const std::string x = freshName(hint, taken);
      env.push_back(x);
      Tree body = fromCom(v.body(), env);
      env.pop_back();
      return Tree::lam(x, std::move(body));
    }
  }
  return Tree::var("?");
}

inline Tree fromCom(const Com& m, std::vector<std::string>& env) {
  if (m.isRet()) return Tree::unit(fromVal(m.value(), env));
  Tree f = fromVal(m.fun(), env);
  return Tree::app(std::move(f), fromCom(m.arg(), env));
}

}  // namespace detail

// Picks printable binder names: each binder keeps its hint unless that
// would capture a variable used in its scope, in which case a counter is
// appended.
inline Tree fromCom(const Com& m) {
  std::vector<std::string> env;
  return detail::fromCom(m, env);
}

inline Tree fromVal(const Val& v) {
  std::vector<std::string> env;
  return detail::fromVal(v, env);
}

class SortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Val toVal(const Tree& t);
inline Com toCom(const Tree& t);

// Sort-checks a named tree built from Var / Lam / Unit / App and converts it
// to the nameless core form. Throws SortError on ill-sorted trees.
inline Val toVal(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return Val::free(t.name());
    case Kind::Lam: return lam(t.name(), toCom(t.child(0)));
    default: throw SortError("expected a value");
  }
}

inline Com toCom(const Tree& t) {
  switch (t.kind()) {
    case Kind::Unit: return Com::ret(toVal(t.child(0)));
    case Kind::App:
      if (!t.child(0).isValue()) throw SortError("a computation cannot be in function position");
      return Com::app(toVal(t.child(0)), toCom(t.child(1)));
    case Kind::Var:
    case Kind::Lam: throw SortError("a bare value is not a computation");
    default: throw SortError("not a core term");
  }
}

}  // namespace lambdacc::named
