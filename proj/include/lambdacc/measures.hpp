#pragma once

// Size and auxiliary size, ordered lexicographically; sigma and id steps
// decrease the pair.
//
//   |x| = 1        |\x.M| = |M| + 1        |V M| = |V| + |M|        |!V| = |V|
//   aux(x) = 1     aux(\x.M) = aux(M) + |M|
//   aux(V M) = aux(V) + aux(M) + 2|V||M|   aux(!V) = aux(V)

#include <cstdint>
#include <tuple>

#include "lambdacc/term.hpp"

namespace lambdacc {

struct MeasurePair {
  std::uint64_t size = 0;
  std::uint64_t aux = 0;

  friend bool operator==(const MeasurePair&, const MeasurePair&) = default;
  friend bool operator<(const MeasurePair& a, const MeasurePair& b) {
    return std::tie(a.size, a.aux) < std::tie(b.size, b.aux);
  }
};

inline MeasurePair measure(const Com& m);

inline MeasurePair measure(const Val& v) {
  if (!v.isAbs()) return {1, 1};
  const MeasurePair b = measure(v.body());
  return {b.size + 1, b.aux + b.size};
}

inline MeasurePair measure(const Com& m) {
  const MeasurePair v = measure(m.value());
  if (m.isRet()) return v;
  const MeasurePair a = measure(m.arg());
  return {v.size + a.size, v.aux + a.aux + 2 * v.size * a.size};
}

}  // namespace lambdacc
