#pragma once

// Exact rational evaluation of connectivity probabilities, halfspace/cuboid
// volumes and the uniform-parent expectations of the graph functionals.
// Volumes are full-dimensional (the sqrt(n+1) embedding factor of the
// degenerate slack simplex is never carried; it cancels in every ratio).

#include <cstddef>
#include <span>
#include <vector>

#include "bcov/rational.hpp"

namespace bcov {

/// Largest subset-enumeration dimension (2^(kMaxIepDimension+1) terms).
inline constexpr std::size_t kMaxIepDimension = 24;

/// {x : a.x <= b} with every a_i > 0, b > 0.
struct Halfspace {
  std::vector<Rational> a;
  Rational b;
};

/// Product of [0, upper_i].
struct Hypercuboid {
  std::vector<Rational> upper;

  static Hypercuboid unit(std::size_t n) { return {std::vector<Rational>(n, Rational(1))}; }
};

/// s^n / n!.
Rational relative_simplex_volume(const Rational& s, std::size_t n);

/// Probability that n iid uniform points on [0, s] leave no gap longer than
/// d (including the two end gaps).
Rational pcon_uniform(const Rational& s, const Rational& d, std::size_t n);

/// Same with a separate threshold per slack (d.size() = n + 1). Signed sum
/// over subsets of slacks forced above their thresholds; subsets whose
/// threshold sum reaches s are pruned together with all their supersets.
/// Throws CapacityError past n = kMaxIepDimension.
Rational pcon_per_slack_uniform(const Rational& s, std::span<const Rational> d);

/// Vol({a.x <= b} intersected with prod [0, c_i]) via the signed vertex sum
/// after rescaling the cuboid to the unit cube.
Rational halfspace_cuboid_volume(const Halfspace& hs, const Hypercuboid& cuboid);

/// Q(b) = sum_{v in {0,1}^n} (-1)^|v| max(b - a.v, 0)^n with n = a.size().
/// Equals n! * prod(a) * Vol({a.x <= b} cap [0,1]^n).
Rational q_sum(std::span<const Rational> a, const Rational& b);
Rational q_sum(std::span<const Rational> a, const Rational& b, std::size_t n);

/// E[components] = 1 + (n+1) max(0, 1 - d/s)^n.
Rational expected_components_uniform(const Rational& s, const Rational& d, std::size_t n);
/// E[coverage] = s (1 - max(0, 1 - d/s)^(n+1)).
Rational expected_coverage_uniform(const Rational& s, const Rational& d, std::size_t n);
/// E[edges] = C(n,2) (1 - max(0, 1 - d/s)^2).
Rational expected_edges_uniform(const Rational& s, const Rational& d, std::size_t n);

/// Per-slack thresholds seen by the free-slack (point-robot) image of a
/// collision-free configuration of n robots of diameter R: the first slack
/// keeps d, the n - 1 inner slacks and the right end slack get d - R.
std::vector<Rational> free_slack_thresholds(const Rational& d, const Rational& R, std::size_t n);

/// Connectivity probability of n uniformly placed collision-free robots of
/// diameter R on [0, s]. Throws DomainError if s < nR.
Rational pcon_cf_uniform(const Rational& s, const Rational& d, const Rational& R, std::size_t n);

/// Threshold of the slack between robot i-1 and robot i (0-based slack
/// index) when robots carry individual ranges and an edge needs both
/// endpoints in range: the minimum of the two adjacent ranges; the end slacks
/// take the range of their single robot.
std::vector<Rational> bidirectional_slack_thresholds(std::span<const Rational> robot_ranges);

}  // namespace bcov
