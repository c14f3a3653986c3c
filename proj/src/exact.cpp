#include "bcov/exact.hpp"

#include <algorithm>
#include <string>

#include "bcov/errors.hpp"
#include "bcov/geometry.hpp"

namespace bcov {

namespace {

// sum over subsets V of `w` with sum(V) < bound of (-1)^|V| (bound - sum(V))^exponent.
// `w` must be positive; it is sorted ascending so that once a prefix sum
// reaches the bound every later extension does too.
class SignedSubsetSum {
 public:
  SignedSubsetSum(std::vector<Rational> w, Rational bound, unsigned long exponent)
      : w_(std::move(w)), bound_(std::move(bound)), exponent_(exponent) {
    std::sort(w_.begin(), w_.end());
  }

  Rational run() {
    total_ = 0;
    if (sgn(bound_) <= 0) return total_;
    visit(0, Rational(0), false);
    return total_;
  }

 private:
  void visit(std::size_t start, const Rational& sum, bool odd) {
    Rational term = pow(Rational(bound_ - sum), exponent_);
    if (odd)
      total_ -= term;
    else
      total_ += term;
    for (std::size_t i = start; i < w_.size(); ++i) {
      Rational next = sum + w_[i];
      if (next >= bound_) break;
      visit(i + 1, next, !odd);
    }
  }

  std::vector<Rational> w_;
  Rational bound_;
  unsigned long exponent_;
  Rational total_;
};

void check_positive(const Rational& q, const char* what) {
  require(sgn(q) > 0, std::string(what) + " must be positive");
}

// max(0, 1 - d/s)
Rational excess_fraction(const Rational& s, const Rational& d) { return rmax(Rational(0), Rational(1 - d / s)); }

}  // namespace

Rational relative_simplex_volume(const Rational& s, std::size_t n) {
  check_positive(s, "boundary length");
  return pow(s, n) / Rational(factorial(n));
}

Rational pcon_uniform(const Rational& s, const Rational& d, std::size_t n) {
  check_positive(s, "boundary length");
  check_positive(d, "threshold");
  switch (d_regime(s, d, n)) {
    case Regime::Empty:
      return 0;
    case Regime::Full:
      return 1;
    case Regime::Partial:
      break;
  }
  Rational unfavorable = 0;
  for (unsigned long k = 1;; ++k) {
    Rational rest = 1 - Rational(k) * d / s;
    if (sgn(rest) <= 0) break;
    Rational term = Rational(binomial(n + 1, k)) * pow(rest, n);
    if (k % 2 == 1)
      unfavorable += term;
    else
      unfavorable -= term;
  }
  return 1 - unfavorable;
}

Rational pcon_per_slack_uniform(const Rational& s, std::span<const Rational> d) {
  check_positive(s, "boundary length");
  require(!d.empty(), "need one threshold per slack");
  for (const auto& x : d) check_positive(x, "threshold");
  const std::size_t n = d.size() - 1;
  if (n > kMaxIepDimension)
    throw CapacityError("per-slack inclusion-exclusion is capped at n = " + std::to_string(kMaxIepDimension) +
                        " robots (got " + std::to_string(n) + ")");
  // P(no slack above threshold) = sum_V (-1)^|V| ((s - d(V))/s)^n, V = {} included;
  // scale by s^n to stay in integers as long as possible
  Rational total = SignedSubsetSum({d.begin(), d.end()}, s, n).run();
  return total / pow(s, n);
}

Rational halfspace_cuboid_volume(const Halfspace& hs, const Hypercuboid& cuboid) {
  const std::size_t n = hs.a.size();
  require(cuboid.upper.size() == n, "halfspace and cuboid dimensions differ");
  require(n >= 1, "dimension must be at least 1");
  if (n > kMaxIepDimension + 1)
    throw CapacityError("halfspace volume is capped at dimension " + std::to_string(kMaxIepDimension + 1));
  check_positive(hs.b, "halfspace offset b");
  std::vector<Rational> scaled(n);
  Rational cuboid_volume = 1, scaled_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    check_positive(hs.a[i], "halfspace coefficient");
    check_positive(cuboid.upper[i], "cuboid bound");
    scaled[i] = hs.a[i] * cuboid.upper[i];
    cuboid_volume *= cuboid.upper[i];
    scaled_product *= scaled[i];
  }
  Rational q = SignedSubsetSum(std::move(scaled), hs.b, n).run();
  return q / (Rational(factorial(n)) * scaled_product) * cuboid_volume;
}

Rational q_sum(std::span<const Rational> a, const Rational& b) {
  for (const auto& x : a) check_positive(x, "coefficient");
  if (a.size() > kMaxIepDimension + 1)
    throw CapacityError("Q(b) is capped at dimension " + std::to_string(kMaxIepDimension + 1));
  return SignedSubsetSum({a.begin(), a.end()}, b, a.size()).run();
}

Rational q_sum(std::span<const Rational> a, const Rational& b, std::size_t n) {
  require(n == a.size(), "Q(b): n must equal the number of coefficients");
  return q_sum(a, b);
}

Rational expected_components_uniform(const Rational& s, const Rational& d, std::size_t n) {
  check_positive(s, "boundary length");
  check_positive(d, "threshold");
  if (d >= s) return 1;
  return 1 + Rational(static_cast<unsigned long>(n + 1)) * pow(excess_fraction(s, d), n);
}

Rational expected_coverage_uniform(const Rational& s, const Rational& d, std::size_t n) {
  check_positive(s, "boundary length");
  require(sgn(d) >= 0, "threshold must be nonnegative");
  if (d >= s) return s;
  return s * (1 - pow(excess_fraction(s, d), n + 1));
}

Rational expected_edges_uniform(const Rational& s, const Rational& d, std::size_t n) {
  check_positive(s, "boundary length");
  require(sgn(d) >= 0, "threshold must be nonnegative");
  Rational pairs(binomial(n, 2));
  if (d >= s) return pairs;
  return pairs * (1 - pow(excess_fraction(s, d), 2));
}

std::vector<Rational> free_slack_thresholds(const Rational& d, const Rational& R, std::size_t n) {
  std::vector<Rational> t(n + 1, Rational(d - R));
  t.front() = d;
  return t;
}

Rational pcon_cf_uniform(const Rational& s, const Rational& d, const Rational& R, std::size_t n) {
  check_positive(s, "boundary length");
  check_positive(d, "threshold");
  require(sgn(R) >= 0, "robot diameter must be nonnegative");
  const Rational reduced = s - Rational(static_cast<unsigned long>(n)) * R;
  require(sgn(reduced) >= 0, "infeasible: n robots of diameter R do not fit on [0, s]");
  if (n == 0) return s <= d ? 1 : 0;
  if (sgn(reduced) == 0) {
    // unique packed configuration: slacks (0, R, ..., R)
    return R <= d ? 1 : 0;
  }
  if (d <= R) return 0;
  return pcon_per_slack_uniform(reduced, free_slack_thresholds(d, R, n));
}

std::vector<Rational> bidirectional_slack_thresholds(std::span<const Rational> r) {
  require(!r.empty(), "need at least one robot range");
  for (const auto& x : r) check_positive(x, "robot range");
  std::vector<Rational> t;
  t.reserve(r.size() + 1);
  t.push_back(r.front());
  for (std::size_t i = 1; i < r.size(); ++i) t.push_back(rmin(r[i - 1], r[i]));
  t.push_back(r.back());
  return t;
}

}  // namespace bcov
