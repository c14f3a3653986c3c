#pragma once

// Exact integration of rational polynomials over simplices and the exact
// connectivity probability for polynomial parent densities.

#include <cstddef>
#include <span>
#include <vector>

#include "bcov/polynomial.hpp"
#include "bcov/rational.hpp"

namespace bcov {

inline constexpr std::size_t kMaxPolynomialRobots = 10;
inline constexpr unsigned kMaxPolynomialDegree = 40;

/// Simplex in R^n given by n + 1 vertices.
struct SimplexND {
  std::vector<std::vector<Rational>> vertices;

  std::size_t dimension() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// {x >= 0, sum x <= 1} in R^n.
  static SimplexND canonical(std::size_t n);
};

/// Integral of prod x_i^m_i over the canonical simplex:
/// prod(m_i!) / (n + sum m_i)!.
Rational monomial_canonical_integral(std::span<const unsigned> exponents);

/// Signed determinant of a square rational matrix (fraction-free elimination).
Rational determinant(std::vector<std::vector<Rational>> m);

/// Integral of `poly` over `simplex` via the affine map from the canonical
/// simplex. Degenerate simplices integrate to 0.
Rational integrate_over_simplex(const RationalPolynomial& poly, const SimplexND& simplex);

/// Exact P(connected) for n iid draws from the polynomial density on [0, s].
/// Inclusion-exclusion over the slacks forced above d; each term is an
/// iterated integral of the Janossy density over the shifted position
/// simplex, computed in univariate polynomial arithmetic with shared
/// prefixes. Throws DomainError for invalid densities and CapacityError past
/// n = 10 or n * degree > 40.
Rational pcon_polynomial_parent(const UniPoly& density, const Rational& s, const Rational& d, std::size_t n);

/// Per-slack thresholds (d.size() = n + 1).
Rational pcon_polynomial_parent(const UniPoly& density, const Rational& s, std::span<const Rational> d);

/// Same quantity through the compatible simplices and the generic
/// multivariate integrate_over_simplex. Much slower; a cross-check route.
Rational pcon_polynomial_parent_by_simplices(const UniPoly& density, const Rational& s, const Rational& d,
                                            std::size_t n);

/// Integer Beta parent: beta_to_polynomial then pcon_polynomial_parent.
Rational beta_pcon(unsigned a, unsigned b, const Rational& s, const Rational& d, std::size_t n);

}  // namespace bcov
