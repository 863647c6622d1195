#pragma once

// Two-sorted terms of the computational core.
//
//   values        V ::= x | \x.M
//   computations  M ::= !V | V M
//
// Bound variables are de Bruijn indices; every binder keeps the name it was
// written with as a printing hint. Equality and hashing ignore hints, so
// operator== is alpha-equivalence.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>

namespace lambdacc {

class Com;
class Val;

namespace detail {
struct ValNode;
struct ComNode;

inline std::size_t hashMix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace detail

class Val {
 public:
  enum class Kind : std::uint8_t { Free, Bound, Abs };

  static Val free(std::string name);
  static Val bound(std::uint32_t index);
  // `body` is already in de Bruijn form: index 0 refers to this binder.
  static Val abs(std::string hint, Com body);

  Kind kind() const;
  bool isAbs() const { return kind() == Kind::Abs; }
  bool isFree() const { return kind() == Kind::Free; }
  bool isBound() const { return kind() == Kind::Bound; }
  bool isVariable() const { return kind() != Kind::Abs; }

  // Free: the variable name. Abs: the binder hint.
  const std::string& name() const;
  std::uint32_t index() const;
  const Com& body() const;

  std::size_t hash() const;
  // One more than the largest index pointing outside this value; 0 when
  // locally closed.
  std::uint32_t looseDepth() const;
  bool sameNode(const Val& other) const { return node_ == other.node_; }

 private:
  Val() = default;
  explicit Val(std::shared_ptr<const detail::ValNode> n) : node_(std::move(n)) {}
  friend struct detail::ValNode;
  friend struct detail::ComNode;
  friend class Com;
  std::shared_ptr<const detail::ValNode> node_;
};

class Com {
 public:
  enum class Kind : std::uint8_t { Ret, App };

  static Com ret(Val value);
  static Com app(Val fun, Com arg);

  Kind kind() const;
  bool isRet() const { return kind() == Kind::Ret; }
  bool isApp() const { return kind() == Kind::App; }

  // Ret: the returned value. App: the function.
  const Val& value() const;
  const Val& fun() const { return value(); }
  const Com& arg() const;

  std::size_t hash() const;
  std::uint32_t looseDepth() const;
  bool sameNode(const Com& other) const { return node_ == other.node_; }

 private:
  Com() = default;
  explicit Com(std::shared_ptr<const detail::ComNode> n) : node_(std::move(n)) {}
  friend struct detail::ValNode;
  friend struct detail::ComNode;
  friend class Val;
  std::shared_ptr<const detail::ComNode> node_;
};

namespace detail {

struct ValNode {
  Val::Kind kind{};
  std::string text;
  std::uint32_t index = 0;
  Com body;
  std::size_t hash = 0;
  std::uint32_t loose = 0;
};

struct ComNode {
  Com::Kind kind{};
  Val value;
  Com arg;
  std::size_t hash = 0;
  std::uint32_t loose = 0;
};

}  // namespace detail

inline Val Val::free(std::string name) {
  auto n = std::make_shared<detail::ValNode>();
  n->kind = Kind::Free;
  n->hash = detail::hashMix(0x51, std::hash<std::string>{}(name));
  n->text = std::move(name);
  return Val(std::move(n));
}

inline Val Val::bound(std::uint32_t index) {
  auto n = std::make_shared<detail::ValNode>();
  n->kind = Kind::Bound;
  n->index = index;
  n->hash = detail::hashMix(0x52, index);
  n->loose = index + 1;
  return Val(std::move(n));
}

inline Val Val::abs(std::string hint, Com body) {
  auto n = std::make_shared<detail::ValNode>();
  n->kind = Kind::Abs;
  n->text = std::move(hint);
  n->hash = detail::hashMix(0x53, body.hash());
  n->loose = body.looseDepth() > 0 ? body.looseDepth() - 1 : 0;
  n->body = std::move(body);
  return Val(std::move(n));
}

inline Val::Kind Val::kind() const { return node_->kind; }
inline const std::string& Val::name() const { return node_->text; }
inline std::uint32_t Val::index() const { return node_->index; }
inline const Com& Val::body() const { return node_->body; }
inline std::size_t Val::hash() const { return node_->hash; }
inline std::uint32_t Val::looseDepth() const { return node_->loose; }

inline Com Com::ret(Val value) {
  auto n = std::make_shared<detail::ComNode>();
  n->kind = Kind::Ret;
  n->hash = detail::hashMix(0x61, value.hash());
  n->loose = value.looseDepth();
  n->value = std::move(value);
  return Com(std::move(n));
}

inline Com Com::app(Val fun, Com arg) {
  auto n = std::make_shared<detail::ComNode>();
  n->kind = Kind::App;
  n->hash = detail::hashMix(detail::hashMix(0x62, fun.hash()), arg.hash());
  n->loose = std::max(fun.looseDepth(), arg.looseDepth());
  n->value = std::move(fun);
  n->arg = std::move(arg);
  return Com(std::move(n));
}

inline Com::Kind Com::kind() const { return node_->kind; }
inline const Val& Com::value() const { return node_->value; }
inline const Com& Com::arg() const { return node_->arg; }
inline std::size_t Com::hash() const { return node_->hash; }
inline std::uint32_t Com::looseDepth() const { return node_->loose; }

// Alpha-equivalence: structural equality on the nameless form.
inline bool operator==(const Com& a, const Com& b);

inline bool operator==(const Val& a, const Val& b) {
  if (a.sameNode(b)) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Val::Kind::Free: return a.name() == b.name();
    case Val::Kind::Bound: return a.index() == b.index();
    case Val::Kind::Abs: return a.body() == b.body();
  }
  return false;
}

inline bool operator==(const Com& a, const Com& b) {
  if (a.sameNode(b)) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  if (a.isRet()) return a.value() == b.value();
  return a.fun() == b.fun() && a.arg() == b.arg();
}

inline bool alphaEq(const Com& a, const Com& b) { return a == b; }
inline bool alphaEq(const Val& a, const Val& b) { return a == b; }

// ---------------------------------------------------------------------------
// Index plumbing

// Adds `by` to every index >= cutoff.
inline Val shift(const Val& v, std::uint32_t by, std::uint32_t cutoff = 0);
inline Com shift(const Com& m, std::uint32_t by, std::uint32_t cutoff = 0);

inline Val shift(const Val& v, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || v.looseDepth() <= cutoff) return v;
  switch (v.kind()) {
    case Val::Kind::Free: return v;
    case Val::Kind::Bound: return Val::bound(v.index() + by);
    case Val::Kind::Abs: return Val::abs(v.name(), shift(v.body(), by, cutoff + 1));
  }
  return v;
}

inline Com shift(const Com& m, std::uint32_t by, std::uint32_t cutoff) {
  if (by == 0 || m.looseDepth() <= cutoff) return m;
  if (m.isRet()) return Com::ret(shift(m.value(), by, cutoff));
  return Com::app(shift(m.fun(), by, cutoff), shift(m.arg(), by, cutoff));
}

// Removes one binder level: index `depth` becomes `arg` (shifted under the
// binders crossed), larger indices drop by one.
inline Val instantiate(const Val& v, const Val& arg, std::uint32_t depth);
inline Com instantiate(const Com& m, const Val& arg, std::uint32_t depth = 0);

inline Val instantiate(const Val& v, const Val& arg, std::uint32_t depth) {
  if (v.looseDepth() <= depth) return v;
  switch (v.kind()) {
    case Val::Kind::Free: return v;
    case Val::Kind::Bound:
      if (v.index() == depth) return shift(arg, depth);
      return Val::bound(v.index() - 1);
    case Val::Kind::Abs: return Val::abs(v.name(), instantiate(v.body(), arg, depth + 1));
  }
  return v;
}

inline Com instantiate(const Com& m, const Val& arg, std::uint32_t depth) {
  if (m.looseDepth() <= depth) return m;
  if (m.isRet()) return Com::ret(instantiate(m.value(), arg, depth));
  return Com::app(instantiate(m.fun(), arg, depth), instantiate(m.arg(), arg, depth));
}

// Inverse of instantiate with a free variable: turns the free `name` into
// the index of a new enclosing binder.
inline Val close(const Val& v, const std::string& name, std::uint32_t depth);
inline Com close(const Com& m, const std::string& name, std::uint32_t depth = 0);

inline Val close(const Val& v, const std::string& name, std::uint32_t depth) {
  switch (v.kind()) {
    case Val::Kind::Free: return v.name() == name ? Val::bound(depth) : v;
    case Val::Kind::Bound: return v.index() >= depth ? Val::bound(v.index() + 1) : v;
    case Val::Kind::Abs: return Val::abs(v.name(), close(v.body(), name, depth + 1));
  }
  return v;
}

inline Com close(const Com& m, const std::string& name, std::uint32_t depth) {
  if (m.isRet()) return Com::ret(close(m.value(), name, depth));
  return Com::app(close(m.fun(), name, depth), close(m.arg(), name, depth));
}

// True when index `depth` (the binder `depth` levels up) occurs.
inline bool mentions(const Val& v, std::uint32_t depth);
inline bool mentions(const Com& m, std::uint32_t depth);

inline bool mentions(const Val& v, std::uint32_t depth) {
  if (v.looseDepth() <= depth) return false;
  switch (v.kind()) {
    case Val::Kind::Free: return false;
    case Val::Kind::Bound: return v.index() == depth;
    case Val::Kind::Abs: return mentions(v.body(), depth + 1);
  }
  return false;
}

inline bool mentions(const Com& m, std::uint32_t depth) {
  if (m.looseDepth() <= depth) return false;
  if (m.isRet()) return mentions(m.value(), depth);
  return mentions(m.fun(), depth) || mentions(m.arg(), depth);
}

// ---------------------------------------------------------------------------
// Builders over named variables

inline Val var(std::string name) { return Val::free(std::move(name)); }
inline Val lam(const std::string& x, const Com& body) { return Val::abs(x, close(body, x)); }
inline Com ret(Val v) { return Com::ret(std::move(v)); }
inline Com app(Val f, Com m) { return Com::app(std::move(f), std::move(m)); }

// ---------------------------------------------------------------------------
// Free variables and substitution

inline void collectFreeVars(const Val& v, std::set<std::string>& out);
inline void collectFreeVars(const Com& m, std::set<std::string>& out);

inline void collectFreeVars(const Val& v, std::set<std::string>& out) {
  switch (v.kind()) {
    case Val::Kind::Free: out.insert(v.name()); break;
    case Val::Kind::Bound: break;
    case Val::Kind::Abs: collectFreeVars(v.body(), out); break;
  }
}

inline void collectFreeVars(const Com& m, std::set<std::string>& out) {
  collectFreeVars(m.value(), out);
  if (m.isApp()) collectFreeVars(m.arg(), out);
}

inline std::set<std::string> freeVars(const Com& m) {
  std::set<std::string> out;
  collectFreeVars(m, out);
  return out;
}

inline std::set<std::string> freeVars(const Val& v) {
  std::set<std::string> out;
  collectFreeVars(v, out);
  return out;
}

inline bool isClosed(const Com& m) { return m.looseDepth() == 0 && freeVars(m).empty(); }

inline Val substitute(const Val& body, const std::string& x, const Val& v, std::uint32_t depth);
inline Com substitute(const Com& body, const std::string& x, const Val& v, std::uint32_t depth = 0);

inline Val substitute(const Val& body, const std::string& x, const Val& v, std::uint32_t depth) {
  switch (body.kind()) {
    case Val::Kind::Free: return body.name() == x ? shift(v, depth) : body;
    case Val::Kind::Bound: return body;
    case Val::Kind::Abs: return Val::abs(body.name(), substitute(body.body(), x, v, depth + 1));
  }
  return body;
}

// M[V/x]. Capture cannot happen: binders are nameless.
inline Com substitute(const Com& body, const std::string& x, const Val& v, std::uint32_t depth) {
  if (body.isRet()) return Com::ret(substitute(body.value(), x, v, depth));
  return Com::app(substitute(body.fun(), x, v, depth), substitute(body.arg(), x, v, depth));
}

// ---------------------------------------------------------------------------
// Shapes

enum class Shape : std::uint8_t { Ret, AppVar, AppAbs };

inline Shape shapeOf(const Com& m) {
  if (m.isRet()) return Shape::Ret;
  return m.fun().isAbs() ? Shape::AppAbs : Shape::AppVar;
}

inline const char* shapeName(Shape s) {
  switch (s) {
    case Shape::Ret: return "ret";
    case Shape::AppVar: return "app-var";
    case Shape::AppAbs: return "app-abs";
  }
  return "?";
}

}  // namespace lambdacc

template <>
struct std::hash<lambdacc::Com> {
  std::size_t operator()(const lambdacc::Com& m) const noexcept { return m.hash(); }
};

template <>
struct std::hash<lambdacc::Val> {
  std::size_t operator()(const lambdacc::Val& v) const noexcept { return v.hash(); }
};
