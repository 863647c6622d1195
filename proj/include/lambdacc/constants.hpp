#pragma once

// Named terms used throughout the examples and tests. Every gallery term has
// its own free variable z.

#include "lambdacc/term.hpp"

namespace lambdacc {

struct NamedConstants {
  Val I;               // \x.!x
  Val Delta;           // \x.x!x
  Com DeltaBang;       // Delta !Delta
  Com VanOostrom;      // (\y.I!y)(z!z)
  Com WeakT;           // V((\x.P)((\y.Q)L)),  V = \z.z!z,  P = Q = L = z!z
  Com BlockedBetaMz;   // Delta((\y.!Delta)(z!z))
  Com SigmaIdOverlap;  // (\y.N)((\x.!x)M),  M = N = z!z
};

inline NamedConstants namedConstants() {
  const Com zz = app(var("z"), ret(var("z")));
  const Val I = lam("x", ret(var("x")));
  const Val Delta = lam("x", app(var("x"), ret(var("x"))));
  const Val V = lam("z", app(var("z"), ret(var("z"))));
  return NamedConstants{
      I,
      Delta,
      app(Delta, ret(Delta)),
      app(lam("y", app(I, ret(var("y")))), zz),
      app(V, app(lam("x", zz), app(lam("y", zz), zz))),
      app(Delta, app(lam("y", ret(Delta)), zz)),
      app(lam("y", zz), app(lam("x", ret(var("x"))), zz)),
  };
}

}  // namespace lambdacc
