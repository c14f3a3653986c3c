#pragma once

// Instance constructions from the hardness reductions, kept as runnable
// cross-checks: a piecewise-uniform instance turned into an inid instance,
// and a halfspace/cuboid volume turned into a piecewise-uniform instance.

#include <cstddef>
#include <vector>

#include "bcov/exact.hpp"
#include "bcov/parents.hpp"
#include "bcov/rational.hpp"

namespace bcov {

struct InidReduction {
  ParentDistribution source;  // n + 1 unit pieces with masses p_1..p_{n+1} on [0, n + 1]
  std::size_t n = 0;
  InidFamily family;  // on [0, n + 2]
  double window = 0;  // n + 1: connectivity is judged on [0, window]
};

/// Robot i of the inid instance has density p_i on [i-1, i] and 1 - p_i on
/// [n+1, n+2]. `masses` holds p_1..p_{n+1} (sum 1).
InidReduction inid_from_pwu(const std::vector<Rational>& masses);

struct HalfspaceReduction {
  Halfspace halfspace;  // all-ones normal, offset b
  Hypercuboid cuboid;   // prod [0, l_i], n + 1 factors
  ParentDistribution parent;
  std::size_t n = 0;
  Rational s;
  Rational d;
  Rational claimed_pcon;  // Vol(halfspace cap cuboid) / Vol(cuboid)
};

/// PWU instance for the cuboid prod [0, l_i] (i = 1..n+1) and offset b:
/// s = b / L, d = 1, n robots, n + 1 equal pieces of [0, s] carrying masses
/// l_i / L, where L = sum l_i.
HalfspaceReduction pwu_from_halfspace(const std::vector<Rational>& l, const Rational& b);

}  // namespace bcov
