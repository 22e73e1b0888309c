#pragma once

#include "pfvs/errors.hpp"
#include "pfvs/rational.hpp"

namespace pfvs {

// Upper bound on the minimum feedback vertex set size of a connected planar
// digraph with n vertices and digirth g.
inline Rat theorem_bound(long n, int g) {
  if (g < 4) throw UnsupportedGirth("no bound is available below digirth 4");
  if (n < 3) throw PreconditionViolated("bound needs n >= 3");
  if (g == 4) return Rat(5 * n - 5, 9);
  if (g == 5) return Rat(2 * n - 5, 4);
  return Rat(2 * n - 6, g);
}

// Upper bound on the maximum number of arc-disjoint dicycles.
inline Rat packing_bound(long n, int g) {
  if (g < 4) throw UnsupportedGirth("no bound is available below digirth 4");
  if (n < 3) throw PreconditionViolated("bound needs n >= 3");
  if (g <= 5) return Rat(2 * n - 5, g - 1);
  return Rat(2 * n - 6, g);
}

}  // namespace pfvs
