#include "bcov/reductions.hpp"

#include "bcov/errors.hpp"

namespace bcov {

namespace {

// piecewise-uniform parent from (right end, density) pieces starting at 0,
// merging neighbours with equal density
ParentDistribution pieces_to_parent(const std::vector<std::pair<Rational, Rational>>& pieces) {
  std::vector<Rational> bp{Rational(0)};
  std::vector<Rational> dens;
  for (const auto& [end, rho] : pieces) {
    if (end <= bp.back()) continue;
    if (!dens.empty() && dens.back() == rho) {
      bp.back() = end;
    } else {
      bp.push_back(end);
      dens.push_back(rho);
    }
  }
  return ParentDistribution::piecewise_uniform(std::move(bp), std::move(dens));
}

}  // namespace

InidReduction inid_from_pwu(const std::vector<Rational>& masses) {
  require(masses.size() >= 2, "need n + 1 >= 2 pieces");
  Rational total = 0;
  for (const auto& p : masses) {
    require(sgn(p) >= 0 && p <= 1, "piece masses must lie in [0, 1]");
    total += p;
  }
  require(total == 1, "piece masses must sum to 1");
  const std::size_t n = masses.size() - 1;

  std::vector<Rational> bp, dens;
  for (std::size_t i = 0; i <= n + 1; ++i) bp.push_back(Rational(static_cast<unsigned long>(i)));
  ParentDistribution source = ParentDistribution::piecewise_uniform(bp, masses);

  std::vector<ParentDistribution> parents;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational ri(static_cast<unsigned long>(i));
    parents.push_back(pieces_to_parent({{ri - 1, Rational(0)},
                                        {ri, masses[i - 1]},
                                        {Rational(static_cast<unsigned long>(n + 1)), Rational(0)},
                                        {Rational(static_cast<unsigned long>(n + 2)), 1 - masses[i - 1]}}));
  }
  return {source, n, InidFamily(static_cast<double>(n + 2), std::move(parents)), static_cast<double>(n + 1)};
}

HalfspaceReduction pwu_from_halfspace(const std::vector<Rational>& l, const Rational& b) {
  require(l.size() >= 2, "need a cuboid of dimension n + 1 >= 2");
  require(sgn(b) > 0, "halfspace offset must be positive");
  Rational L = 0, vol = 1;
  for (const auto& x : l) {
    require(sgn(x) > 0, "cuboid sides must be positive");
    L += x;
    vol *= x;
  }
  HalfspaceReduction r{Halfspace{std::vector<Rational>(l.size(), Rational(1)), b}, Hypercuboid{l},
                       ParentDistribution::uniform(1), l.size() - 1, b / L, Rational(1), 0};
  const Rational k(static_cast<unsigned long>(l.size()));
  const Rational width = r.s / k;
  std::vector<Rational> bp{Rational(0)}, dens;
  for (std::size_t i = 0; i < l.size(); ++i) {
    bp.push_back(width * Rational(static_cast<unsigned long>(i + 1)));
    dens.push_back(l[i] / L / width);
  }
  r.parent = ParentDistribution::piecewise_uniform(std::move(bp), std::move(dens));
  r.claimed_pcon = halfspace_cuboid_volume(r.halfspace, r.cuboid) / vol;
  return r;
}

}  // namespace bcov
