#pragma once

// Term models of the sibling calculi, as sort-checked named trees.
//
//   let-notation   V ::= x | \x.M      M ::= [V] | let x = M in N | V W
//   unit/star      V ::= x | \x.M      M ::= unit V | M * V
//   call-by-value  P ::= x | \x.P | P Q
//     kernel       V ::= x | \x.M      M ::= V | V M

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "lambdacc/named.hpp"

namespace lambdacc {

namespace detail {

template <class Tag>
struct NamedTerm {
  named::Tree tree;

  explicit NamedTerm(named::Tree t) : tree(std::move(t)) {}
  friend bool operator==(const NamedTerm& a, const NamedTerm& b) { return named::alphaEq(a.tree, b.tree); }
};

}  // namespace detail

struct MlTag {};
struct StarTag {};
struct CbvTag {};

using MlTerm = detail::NamedTerm<MlTag>;
using StarTerm = detail::NamedTerm<StarTag>;
using CbvTerm = detail::NamedTerm<CbvTag>;

namespace sorts {

using named::Kind;
using named::Tree;

inline bool mlComputation(const Tree& t);

inline bool mlValue(const Tree& t) {
  if (t.is(Kind::Var)) return true;
  return t.is(Kind::Lam) && mlComputation(t.child(0));
}

inline bool mlComputation(const Tree& t) {
  switch (t.kind()) {
    case Kind::Unit: return mlValue(t.child(0));
    case Kind::Let: return mlComputation(t.child(0)) && mlComputation(t.child(1));
    case Kind::App: return mlValue(t.child(0)) && mlValue(t.child(1));
    default: return false;
  }
}

inline bool starComputation(const Tree& t);

inline bool starValue(const Tree& t) {
  if (t.is(Kind::Var)) return true;
  return t.is(Kind::Lam) && starComputation(t.child(0));
}

inline bool starComputation(const Tree& t) {
  switch (t.kind()) {
    case Kind::Unit: return starValue(t.child(0));
    case Kind::Star: return starComputation(t.child(0)) && starValue(t.child(1));
    default: return false;
  }
}

inline bool cbvTerm(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return true;
    case Kind::Lam: return cbvTerm(t.child(0));
    case Kind::App: return cbvTerm(t.child(0)) && cbvTerm(t.child(1));
    default: return false;
  }
}

inline bool kernelComputation(const Tree& t);

inline bool kernelValue(const Tree& t) {
  if (t.is(Kind::Var)) return true;
  return t.is(Kind::Lam) && kernelComputation(t.child(0));
}

inline bool kernelComputation(const Tree& t) {
  if (t.is(Kind::App)) return kernelValue(t.child(0)) && kernelComputation(t.child(1));
  return kernelValue(t);
}

}  // namespace sorts

}  // namespace lambdacc

template <class Tag>
struct std::hash<lambdacc::detail::NamedTerm<Tag>> {
  std::size_t operator()(const lambdacc::detail::NamedTerm<Tag>& t) const noexcept {
    return lambdacc::named::alphaHash(t.tree);
  }
};
