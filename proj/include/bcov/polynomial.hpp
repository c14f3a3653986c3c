#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bcov/rational.hpp"

namespace bcov {

/// Dense univariate polynomial with rational coefficients, c[k] x^k.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(std::size_t degree, const Rational& c = 1);

  std::span<const Rational> coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  /// Antiderivative vanishing at 0.
  UniPoly antiderivative() const;
  UniPoly derivative() const;
  /// q(x) = p(x + shift).
  UniPoly shifted(const Rational& shift) const;
  /// q(x) = p(factor * x).
  UniPoly scaled(const Rational& factor) const;
  /// Definite integral over [a, b].
  Rational integrate(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& k);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& k) { return a *= k; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial: exponent vector -> nonzero rational
/// coefficient. All exponent vectors have length vars().
class RationalPolynomial {
 public:
  explicit RationalPolynomial(std::size_t vars = 0) : vars_(vars) {}

  static RationalPolynomial constant(std::size_t vars, const Rational& c);
  /// The polynomial x_i (0-based).
  static RationalPolynomial variable(std::size_t vars, std::size_t i);
  /// c0 + sum_i c[i] x_i.
  static RationalPolynomial affine(const Rational& c0, std::span<const Rational> c);
  static RationalPolynomial from_univariate(const UniPoly& p);

  std::size_t vars() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  /// Adds c * x^e (removes the term if it cancels).
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  /// Substitutes x_i -> images[i] (each a polynomial in images[i].vars()
  /// variables) and expands.
  RationalPolynomial compose(std::span<const RationalPolynomial> images) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& k);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& k) { return a *= k; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  RationalPolynomial pow(unsigned k) const;

 private:
  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace bcov
