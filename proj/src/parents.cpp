#include "bcov/parents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bcov/errors.hpp"

namespace bcov {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_double(q));
  return out;
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Nonnegativity of p on [0, s]: endpoints, a rational grid, and the points
// where p' changes sign on a fine float grid (refined by bisection).
bool nonnegative_on(const UniPoly& p, const Rational& s) {
  constexpr int kGrid = 256;
  for (int i = 0; i <= kGrid; ++i) {
    if (sgn(p(s * make_rational(i, kGrid))) < 0) return false;
  }
  UniPoly dp = p.derivative();
  if (dp.is_zero()) return true;
  const double sd = to_double(s);
  constexpr int kFine = 4096;
  double prev_x = 0, prev_v = dp(0.0);
  for (int i = 1; i <= kFine; ++i) {
    double x = sd * i / kFine;
    double v = dp(x);
    if ((prev_v < 0) != (v < 0)) {
      double lo = prev_x, hi = x;
      bool lo_neg = prev_v < 0;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((dp(mid) < 0) == lo_neg)
          lo = mid;
        else
          hi = mid;
      }
      if (sgn(p(from_double(0.5 * (lo + hi)))) < 0) return false;
    }
    prev_x = x;
    prev_v = v;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

ParentDistribution::ParentDistribution(Variant v) : v_(std::move(v)) {
  std::visit(
      overloaded{
          [&](const UniformParent& u) { s_ = to_double(u.s); },
          [&](const PiecewiseUniformParent& p) {
            s_ = to_double(p.breakpoints.back());
            bp_ = to_doubles(p.breakpoints);
            dens_ = to_doubles(p.densities);
            exact_cum_.assign(1, Rational(0));
            for (std::size_t i = 0; i < p.densities.size(); ++i)
              exact_cum_.push_back(exact_cum_.back() + p.densities[i] * (p.breakpoints[i + 1] - p.breakpoints[i]));
            cum_ = to_doubles(exact_cum_);
          },
          [&](const PolynomialParent& p) {
            s_ = to_double(p.s);
            pdf_c_ = to_doubles(p.density.coeffs());
            cdf_c_ = to_doubles(p.density.antiderivative().coeffs());
          },
          [&](const BetaIntParent& b) {
            s_ = to_double(b.s);
            UniPoly d = beta_to_polynomial(b.a, b.b, b.s);
            pdf_c_ = to_doubles(d.coeffs());
            cdf_c_ = to_doubles(d.antiderivative().coeffs());
          },
          [&](const TriangularParent& t) { s_ = to_double(t.s); },
          [&](const TruncatedGaussianParent& g) {
            s_ = g.s;
            tg_lo_ = std_normal_cdf((0 - g.mu) / g.sigma);
            tg_mass_ = std_normal_cdf((g.s - g.mu) / g.sigma) - tg_lo_;
            require(tg_mass_ > 0, "truncated Gaussian has no mass on [0, s]");
          },
      },
      v_);
}

ParentDistribution ParentDistribution::uniform(const Rational& s) {
  require(s > 0, "support length must be positive");
  return ParentDistribution(UniformParent{s});
}

ParentDistribution ParentDistribution::piecewise_uniform(std::vector<Rational> breakpoints,
                                                         std::vector<Rational> densities) {
  require(breakpoints.size() >= 2, "piecewise-uniform parent needs at least two breakpoints");
  require(densities.size() + 1 == breakpoints.size(), "need one density per piece");
  require(sgn(breakpoints.front()) == 0, "first breakpoint must be 0");
  Rational mass = 0;
  for (std::size_t i = 0; i < densities.size(); ++i) {
    require(breakpoints[i] < breakpoints[i + 1], "breakpoints must be strictly increasing");
    require(densities[i] >= 0, "densities must be nonnegative");
    mass += densities[i] * (breakpoints[i + 1] - breakpoints[i]);
  }
  require(mass == 1, "piecewise-uniform densities integrate to " + to_fraction_string(mass) + ", not 1");
  return ParentDistribution(PiecewiseUniformParent{std::move(breakpoints), std::move(densities)});
}

ParentDistribution ParentDistribution::polynomial(UniPoly density, const Rational& s, bool normalize) {
  require(s > 0, "support length must be positive");
  require(!density.is_zero(), "zero density");
  require(nonnegative_on(density, s), "polynomial density is negative somewhere on [0, s]");
  Rational mass = density.integrate(0, s);
  if (mass != 1) {
    require(normalize, "polynomial density integrates to " + to_fraction_string(mass) + ", not 1");
    require(sgn(mass) > 0, "polynomial density has zero mass");
    density *= Rational(1) / mass;
  }
  return ParentDistribution(PolynomialParent{std::move(density), s});
}

ParentDistribution ParentDistribution::beta_int(unsigned a, unsigned b, const Rational& s) {
  require(a >= 1 && b >= 1, "Beta parameters must be positive integers");
  require(s > 0, "support length must be positive");
  return ParentDistribution(BetaIntParent{a, b, s});
}

ParentDistribution ParentDistribution::triangular(const Rational& mode, const Rational& s) {
  require(s > 0, "support length must be positive");
  require(mode >= 0 && mode <= s, "mode must lie in [0, s]");
  return ParentDistribution(TriangularParent{mode, s});
}

ParentDistribution ParentDistribution::truncated_gaussian(double mu, double sigma, double s) {
  require(s > 0 && std::isfinite(s), "support length must be positive");
  require(sigma > 0 && std::isfinite(sigma) && std::isfinite(mu), "sigma must be positive");
  return ParentDistribution(TruncatedGaussianParent{mu, sigma, s});
}

std::string ParentDistribution::type_name() const {
  return std::visit(overloaded{
                        [](const UniformParent&) { return "uniform"; },
                        [](const PiecewiseUniformParent&) { return "pwu"; },
                        [](const PolynomialParent&) { return "poly"; },
                        [](const BetaIntParent&) { return "beta"; },
                        [](const TriangularParent&) { return "triangular"; },
                        [](const TruncatedGaussianParent&) { return "truncated_gaussian"; },
                    },
                    v_);
}

Rational ParentDistribution::exact_support() const {
  return std::visit(overloaded{
                        [](const UniformParent& u) { return u.s; },
                        [](const PiecewiseUniformParent& p) { return p.breakpoints.back(); },
                        [](const PolynomialParent& p) { return p.s; },
                        [](const BetaIntParent& b) { return b.s; },
                        [](const TriangularParent& t) { return t.s; },
                        [](const TruncatedGaussianParent&) -> Rational {
                          throw DomainError("truncated Gaussian parent has no exact form");
                        },
                    },
                    v_);
}

void ParentDistribution::check_support(double t) const {
  require(t >= 0 && t <= s_, "argument outside the parent's support");
}

void ParentDistribution::check_support(const Rational& t) const {
  require(t >= 0 && t <= exact_support(), "argument outside the parent's support");
}

double ParentDistribution::pdf_at(double t) const {
  check_support(t);
  return std::visit(
      overloaded{
          [&](const UniformParent&) { return 1.0 / s_; },
          [&](const PiecewiseUniformParent&) {
            // right-continuous pieces; the last piece includes s
            auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
            std::size_t piece = std::min<std::size_t>(it - bp_.begin(), dens_.size()) - 1;
            return dens_[piece];
          },
          [&](const PolynomialParent&) { return std::max(0.0, horner(pdf_c_, t)); },
          [&](const BetaIntParent&) { return std::max(0.0, horner(pdf_c_, t)); },
          [&](const TriangularParent& tri) {
            double m = to_double(tri.mode);
            if (t < m || (t == m && m == s_)) return 2 * t / (s_ * m);
            return 2 * (s_ - t) / (s_ * (s_ - m));
          },
          [&](const TruncatedGaussianParent& g) {
            double z = (t - g.mu) / g.sigma;
            return kInvSqrt2Pi * std::exp(-0.5 * z * z) / (g.sigma * tg_mass_);
          },
      },
      v_);
}

double ParentDistribution::cdf_at(double t) const {
  check_support(t);
  if (t >= s_) return 1.0;
  double v = std::visit(
      overloaded{
          [&](const UniformParent&) { return t / s_; },
          [&](const PiecewiseUniformParent&) {
            auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
            std::size_t piece = std::min<std::size_t>(it - bp_.begin(), dens_.size()) - 1;
            return cum_[piece] + dens_[piece] * (t - bp_[piece]);
          },
          [&](const PolynomialParent&) { return horner(cdf_c_, t); },
          [&](const BetaIntParent&) { return horner(cdf_c_, t); },
          [&](const TriangularParent& tri) {
            double m = to_double(tri.mode);
            if (t <= m && m > 0) return t * t / (s_ * m);
            return 1 - (s_ - t) * (s_ - t) / (s_ * (s_ - m));
          },
          [&](const TruncatedGaussianParent& g) {
            return (std_normal_cdf((t - g.mu) / g.sigma) - tg_lo_) / tg_mass_;
          },
      },
      v_);
  return std::clamp(v, 0.0, 1.0);
}

double ParentDistribution::poly_inverse(double u) const {
  // cdf is nondecreasing; bisection for the leftmost t with cdf(t) >= u
  double lo = 0, hi = s_;
  for (int it = 0; it < 100 && hi - lo > 0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (horner(cdf_c_, mid) >= u)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double ParentDistribution::inverse_cdf(double u) const {
  require(u >= 0 && u <= 1, "probability outside [0, 1]");
  return std::visit(
      overloaded{
          [&](const UniformParent&) { return std::min(u * s_, s_); },
          [&](const PiecewiseUniformParent&) {
            // first piece whose right cumulative mass reaches u
            auto it = std::lower_bound(cum_.begin() + 1, cum_.end(), u);
            std::size_t piece = std::min<std::size_t>(it - cum_.begin(), dens_.size()) - 1;
            if (dens_[piece] <= 0) return bp_[piece];
            double t = bp_[piece] + (u - cum_[piece]) / dens_[piece];
            return std::clamp(t, bp_[piece], bp_[piece + 1]);
          },
          [&](const PolynomialParent&) { return u <= 0 ? 0.0 : poly_inverse(u); },
          [&](const BetaIntParent&) { return u <= 0 ? 0.0 : poly_inverse(u); },
          [&](const TriangularParent& tri) {
            double m = to_double(tri.mode);
            double t = (u * s_ <= m) ? std::sqrt(u * s_ * m) : s_ - std::sqrt((1 - u) * s_ * (s_ - m));
            return std::clamp(t, 0.0, s_);
          },
          [&](const TruncatedGaussianParent& g) {
            if (u <= 0) return 0.0;
            if (u >= 1) return s_;
            double lo = 0, hi = s_;
            while (hi - lo > 1e-14 * std::max(1.0, s_)) {
              double mid = 0.5 * (lo + hi);
              double c = (std_normal_cdf((mid - g.mu) / g.sigma) - tg_lo_) / tg_mass_;
              if (c >= u)
                hi = mid;
              else
                lo = mid;
            }
            return hi;
          },
      },
      v_);
}

Rational ParentDistribution::pdf_at(const Rational& t) const {
  check_support(t);
  return std::visit(overloaded{
                        [&](const UniformParent& u) { return Rational(1 / u.s); },
                        [&](const PiecewiseUniformParent& p) {
                          auto it = std::upper_bound(p.breakpoints.begin(), p.breakpoints.end(), t);
                          std::size_t piece =
                              std::min<std::size_t>(it - p.breakpoints.begin(), p.densities.size()) - 1;
                          return p.densities[piece];
                        },
                        [&](const PolynomialParent& p) { return p.density(t); },
                        [&](const BetaIntParent& b) { return beta_to_polynomial(b.a, b.b, b.s)(t); },
                        [&](const TriangularParent& tri) -> Rational {
                          if (t < tri.mode || (t == tri.mode && tri.mode == tri.s)) return 2 * t / (tri.s * tri.mode);
                          return 2 * (tri.s - t) / (tri.s * (tri.s - tri.mode));
                        },
                        [&](const TruncatedGaussianParent&) -> Rational {
                          throw DomainError("truncated Gaussian parent has no exact form");
                        },
                    },
                    v_);
}

Rational ParentDistribution::cdf_at(const Rational& t) const {
  check_support(t);
  return std::visit(overloaded{
                        [&](const UniformParent& u) { return Rational(t / u.s); },
                        [&](const PiecewiseUniformParent& p) {
                          auto it = std::upper_bound(p.breakpoints.begin(), p.breakpoints.end(), t);
                          std::size_t piece =
                              std::min<std::size_t>(it - p.breakpoints.begin(), p.densities.size()) - 1;
                          return Rational(exact_cum_[piece] + p.densities[piece] * (t - p.breakpoints[piece]));
                        },
                        [&](const PolynomialParent& p) { return p.density.integrate(0, t); },
                        [&](const BetaIntParent& b) { return beta_to_polynomial(b.a, b.b, b.s).integrate(0, t); },
                        [&](const TriangularParent& tri) -> Rational {
                          if (t <= tri.mode && sgn(tri.mode) > 0) return t * t / (tri.s * tri.mode);
                          return 1 - (tri.s - t) * (tri.s - t) / (tri.s * (tri.s - tri.mode));
                        },
                        [&](const TruncatedGaussianParent&) -> Rational {
                          throw DomainError("truncated Gaussian parent has no exact form");
                        },
                    },
                    v_);
}

std::optional<UniPoly> ParentDistribution::density_polynomial() const {
  return std::visit(overloaded{
                        [](const UniformParent& u) -> std::optional<UniPoly> { return UniPoly::constant(1 / u.s); },
                        [](const PolynomialParent& p) -> std::optional<UniPoly> { return p.density; },
                        [](const BetaIntParent& b) -> std::optional<UniPoly> {
                          return beta_to_polynomial(b.a, b.b, b.s);
                        },
                        [](const auto&) -> std::optional<UniPoly> { return std::nullopt; },
                    },
                    v_);
}

// ---------------------------------------------------------------------------

InidFamily::InidFamily(double s, std::vector<ParentDistribution> parents) : s_(s), parents_(std::move(parents)) {
  require(s > 0, "boundary length must be positive");
  for (const auto& p : parents_) require(p.support() <= s, "parent support exceeds the boundary");
}

namespace {

void check_rank(std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, "order-statistic rank k must satisfy 1 <= k <= n");
}

// P(at least k successes) for independent Bernoulli(p_i).
template <class T>
T at_least_k(std::span<const T> p, std::size_t k) {
  std::vector<T> dist(p.size() + 1, T(0));
  dist[0] = T(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j > 0; --j) dist[j] = dist[j] * (T(1) - p[i]) + dist[j - 1] * p[i];
    dist[0] = dist[0] * (T(1) - p[i]);
  }
  T tail(0);
  for (std::size_t j = k; j < dist.size(); ++j) tail += dist[j];
  return tail;
}

}  // namespace

double order_statistic_cdf(const ParentDistribution& parent, std::size_t n, std::size_t k, double t) {
  check_rank(n, k);
  double F = parent.cdf_at(t);
  if (F <= 0) return 0;
  if (F >= 1) return 1;
  const double lf = std::log(F), lg = std::log1p(-F);
  double sum = 0;
  for (std::size_t i = k; i <= n; ++i) {
    double lc = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
    sum += std::exp(lc + i * lf + (n - i) * lg);
  }
  return std::clamp(sum, 0.0, 1.0);
}

Rational order_statistic_cdf(const ParentDistribution& parent, std::size_t n, std::size_t k, const Rational& t) {
  check_rank(n, k);
  Rational F = parent.cdf_at(t);
  Rational G = 1 - F;
  Rational sum = 0;
  for (std::size_t i = k; i <= n; ++i) sum += Rational(binomial(n, i)) * pow(F, i) * pow(G, n - i);
  return sum;
}

double order_statistic_cdf_inid(const InidFamily& family, std::size_t k, double t) {
  check_rank(family.size(), k);
  require(t >= 0 && t <= family.length(), "argument outside [0, s]");
  std::vector<double> p;
  p.reserve(family.size());
  for (const auto& parent : family.parents()) p.push_back(t >= parent.support() ? 1.0 : parent.cdf_at(t));
  return std::clamp(at_least_k<double>(p, k), 0.0, 1.0);
}

Rational order_statistic_cdf_inid(std::span<const ParentDistribution> parents, std::size_t k, const Rational& t) {
  check_rank(parents.size(), k);
  require(t >= 0, "argument outside [0, s]");
  std::vector<Rational> p;
  p.reserve(parents.size());
  for (const auto& parent : parents) {
    Rational s = parent.exact_support();
    p.push_back(t >= s ? Rational(1) : parent.cdf_at(t));
  }
  return at_least_k<Rational>(p, k);
}

double joint_orderstat_density_at_indices(const ParentDistribution& parent, std::size_t n,
                                          std::span<const std::size_t> indices, std::span<const double> points) {
  require(indices.size() == points.size(), "one point per index is required");
  require(!indices.empty(), "at least one index is required");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    require(indices[j] >= 1 && indices[j] <= n, "indices must lie in [1, n]");
    require(j == 0 || indices[j - 1] < indices[j], "indices must be strictly increasing");
    require(j == 0 || points[j - 1] <= points[j], "points must be nondecreasing");
  }
  double log_density = std::lgamma(n + 1.0);
  for (double t : points) {
    double f = parent.pdf_at(t);
    if (f <= 0) return 0;
    log_density += std::log(f);
  }
  const std::size_t k = indices.size();
  for (std::size_t j = 0; j <= k; ++j) {
    std::size_t lo_rank = j == 0 ? 0 : indices[j - 1];
    std::size_t hi_rank = j == k ? n + 1 : indices[j];
    double lo_F = j == 0 ? 0.0 : parent.cdf_at(points[j - 1]);
    double hi_F = j == k ? 1.0 : parent.cdf_at(points[j]);
    std::size_t m = hi_rank - lo_rank - 1;
    if (m == 0) continue;
    double gap = hi_F - lo_F;
    if (gap <= 0) return 0;
    log_density += m * std::log(gap) - std::lgamma(m + 1.0);
  }
  return std::exp(log_density);
}

double janossy_density(const ParentDistribution& parent, std::span<const double> x) {
  double d = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(i == 0 || x[i - 1] <= x[i], "positions are not sorted");
    d *= parent.pdf_at(x[i]) * static_cast<double>(i + 1);
  }
  return d;
}

double janossy_density(const ParentDistribution& parent, const Configuration& config) {
  return janossy_density(parent, config.positions());
}

double interval_mass(const ParentDistribution& parent, std::size_t n, double a, double b) {
  require(a <= b, "interval endpoints out of order");
  return static_cast<double>(n) * (parent.cdf_at(b) - parent.cdf_at(a));
}

Rational interval_mass(const ParentDistribution& parent, std::size_t n, const Rational& a, const Rational& b) {
  require(a <= b, "interval endpoints out of order");
  return Rational(static_cast<unsigned long>(n)) * (parent.cdf_at(b) - parent.cdf_at(a));
}

Rational uniform_slack_orderstat_mean(const Rational& s, std::size_t n, std::size_t i) {
  require(i >= 1 && i <= n + 1, "slack rank must satisfy 1 <= i <= n+1");
  Rational h = 0;
  for (std::size_t j = n + 2 - i; j <= n + 1; ++j) h += Rational(1, static_cast<unsigned long>(j));
  return s / static_cast<unsigned long>(n + 1) * h;
}

UniPoly beta_to_polynomial(unsigned a, unsigned b, const Rational& s) {
  require(a >= 1 && b >= 1, "Beta parameters must be positive integers");
  require(s > 0, "support length must be positive");
  // Z = (a+b-1)! / ((a-1)! (b-1)! s^(a+b-1))
  Rational z(factorial(a + b - 1), factorial(a - 1) * factorial(b - 1));
  z.canonicalize();
  z /= pow(s, a + b - 1);
  std::vector<Rational> c(a + b - 1);
  // x^(a-1) (s-x)^(b-1) = sum_k C(b-1,k) s^(b-1-k) (-1)^k x^(a-1+k)
  for (unsigned k = 0; k + 1 <= b; ++k) {
    Rational term = Rational(binomial(b - 1, k)) * pow(s, b - 1 - k) * z;
    c[a - 1 + k] = (k % 2 == 0) ? term : Rational(-term);
  }
  return UniPoly(std::move(c));
}

}  // namespace bcov
