#pragma once

// Attachment ("parent") distributions on [0, s], their order statistics, and
// inverse-cdf sampling support.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bcov/geometry.hpp"
#include "bcov/polynomial.hpp"
#include "bcov/rational.hpp"

namespace bcov {

struct UniformParent {
  Rational s;
};

/// Constant density densities[i] on [breakpoints[i], breakpoints[i+1]].
struct PiecewiseUniformParent {
  std::vector<Rational> breakpoints;  // 0 = L_0 < L_1 < ... < L_k = s
  std::vector<Rational> densities;    // k entries, >= 0
};

struct PolynomialParent {
  UniPoly density;
  Rational s;
};

/// Z x^(a-1) (s-x)^(b-1) on [0, s].
struct BetaIntParent {
  unsigned a = 1;
  unsigned b = 1;
  Rational s;
};

struct TriangularParent {
  Rational mode;
  Rational s;
};

/// N(mu, sigma^2) restricted to [0, s]. No exact path; Monte Carlo only.
struct TruncatedGaussianParent {
  double mu = 0;
  double sigma = 1;
  double s = 1;
};

class ParentDistribution {
 public:
  using Variant = std::variant<UniformParent, PiecewiseUniformParent, PolynomialParent, BetaIntParent,
                               TriangularParent, TruncatedGaussianParent>;

  static ParentDistribution uniform(const Rational& s);
  static ParentDistribution piecewise_uniform(std::vector<Rational> breakpoints, std::vector<Rational> densities);
  /// Rejects densities that are negative somewhere on [0, s] (checked at the
  /// endpoints, on a 257-point rational grid and at numerically located
  /// critical points) or whose exact mass differs from 1, unless `normalize`
  /// is set, in which case the density is divided by its mass.
  static ParentDistribution polynomial(UniPoly density, const Rational& s, bool normalize = false);
  static ParentDistribution beta_int(unsigned a, unsigned b, const Rational& s);
  static ParentDistribution triangular(const Rational& mode, const Rational& s);
  static ParentDistribution truncated_gaussian(double mu, double sigma, double s);

  const Variant& kind() const { return v_; }
  std::string type_name() const;

  double support() const { return s_; }
  /// Throws DomainError for the truncated Gaussian.
  Rational exact_support() const;
  bool has_exact_form() const { return !std::holds_alternative<TruncatedGaussianParent>(v_); }

  double pdf_at(double t) const;
  double cdf_at(double t) const;
  /// Left endpoint of any cdf plateau at level u.
  double inverse_cdf(double u) const;

  Rational pdf_at(const Rational& t) const;
  Rational cdf_at(const Rational& t) const;

  /// Single polynomial density on the whole support (uniform, polynomial,
  /// integer Beta); empty for the piecewise families.
  std::optional<UniPoly> density_polynomial() const;

 private:
  explicit ParentDistribution(Variant v);
  void check_support(double t) const;
  void check_support(const Rational& t) const;
  double poly_inverse(double u) const;

  Variant v_;
  double s_ = 1;
  // cached float data
  std::vector<double> pdf_c_, cdf_c_;
  std::vector<double> bp_, dens_, cum_;
  double tg_lo_ = 0, tg_mass_ = 1;
  std::vector<Rational> exact_cum_;
};

/// Independent, non-identically distributed parents, one per robot, on a
/// common boundary [0, s]. Individual supports may be shorter than s.
class InidFamily {
 public:
  InidFamily(double s, std::vector<ParentDistribution> parents);
  double length() const { return s_; }
  std::size_t size() const { return parents_.size(); }
  const ParentDistribution& operator[](std::size_t i) const { return parents_[i]; }
  std::span<const ParentDistribution> parents() const { return parents_; }

 private:
  double s_;
  std::vector<ParentDistribution> parents_;
};

/// P(k-th smallest of n iid draws <= t) = sum_{i>=k} C(n,i) F^i (1-F)^(n-i).
double order_statistic_cdf(const ParentDistribution& parent, std::size_t n, std::size_t k, double t);
Rational order_statistic_cdf(const ParentDistribution& parent, std::size_t n, std::size_t k, const Rational& t);

/// Same quantity for independent non-identical parents, via the
/// Poisson-binomial count of {X_i <= t} (O(n^2) convolution).
double order_statistic_cdf_inid(const InidFamily& family, std::size_t k, double t);
Rational order_statistic_cdf_inid(std::span<const ParentDistribution> parents, std::size_t k, const Rational& t);

/// Joint density of the order statistics with 1-based ranks `indices` at the
/// nondecreasing points `points`.
double joint_orderstat_density_at_indices(const ParentDistribution& parent, std::size_t n,
                                          std::span<const std::size_t> indices, std::span<const double> points);

/// n! prod f(x_(i)) for sorted positions.
double janossy_density(const ParentDistribution& parent, std::span<const double> sorted_positions);
double janossy_density(const ParentDistribution& parent, const Configuration& config);

/// Expected number of the n points falling in [a, b]: n (F(b) - F(a)). For a
/// fixed n the count is Binomial(n, F(b) - F(a)).
double interval_mass(const ParentDistribution& parent, std::size_t n, double a, double b);
Rational interval_mass(const ParentDistribution& parent, std::size_t n, const Rational& a, const Rational& b);

/// Mean of the i-th smallest of the n+1 uniform spacings of [0, s]:
/// s/(n+1) * sum_{j=n+2-i}^{n+1} 1/j.
Rational uniform_slack_orderstat_mean(const Rational& s, std::size_t n, std::size_t i);

/// Exact monomial expansion of the rescaled integer Beta density on [0, s].
UniPoly beta_to_polynomial(unsigned a, unsigned b, const Rational& s);

}  // namespace bcov
