#include "bcov/dynamics.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "bcov/errors.hpp"

namespace bcov {

PconSequence::PconSequence(std::vector<double> p) : p_(std::move(p)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    require(p_[i] >= 0 && p_[i] <= 1, "connection probabilities must lie in [0, 1]");
    require(i == 0 || p_[i - 1] <= p_[i], "connection probabilities must be nondecreasing");
  }
}

std::size_t PconSequence::n_min() const {
  std::size_t i = 0;
  while (i < p_.size() && p_[i] == 0) ++i;
  return i;
}

std::vector<double> stopping_pmf_formula(const PconSequence& p, std::size_t horizon) {
  require(horizon < p.size(), "horizon must be below the sequence length");
  std::vector<double> tau(horizon + 1);
  tau[0] = p[0];
  for (std::size_t i = 1; i <= horizon; ++i) tau[i] = (1 - p[i - 1]) * p[i];
  return tau;
}

StoppingTimeReport expected_stopping_time_formula(const PconSequence& p, std::size_t horizon) {
  auto tau = stopping_pmf_formula(p, horizon);
  StoppingTimeReport r;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    r.mean += static_cast<double>(i) * tau[i];
    r.mass += tau[i];
  }
  const std::size_t n0 = p.n_min();
  if (n0 < p.size()) {
    r.reciprocal_bound = 1 / p[n0];
    r.geometric_mean = static_cast<double>(n0) - 1 + 1 / p[n0];
  } else {
    r.reciprocal_bound = r.geometric_mean = HUGE_VAL;
  }
  r.horizon_warning = r.mass < 0.999;
  return r;
}

std::size_t simulate_sequential_attachment(const ParentDistribution& parent, double d, std::size_t cap,
                                           CounterRng& rng) {
  require(d > 0, "threshold must be positive");
  const double s = parent.support();
  std::size_t bad = s > d ? 1 : 0;
  if (bad == 0) return 0;
  std::multiset<double> pos;
  for (std::size_t i = 1; i <= cap; ++i) {
    const double x = parent.inverse_cdf(rng.uniform());
    auto it = pos.insert(x);
    const double left = it == pos.begin() ? 0.0 : *std::prev(it);
    const double right = std::next(it) == pos.end() ? s : *std::next(it);
    if (right - left > d) --bad;
    if (x - left > d) ++bad;
    if (right - x > d) ++bad;
    if (bad == 0) return i;
  }
  throw CapacityError("not connected after " + std::to_string(cap) + " robots");
}

StoppingTimeEstimate estimate_stopping_time(const ParentDistribution& parent, double d, std::size_t cap,
                                            std::size_t max_k, const McOptions& opts) {
  auto m = run_trials(opts.trials, opts.rng, opts.workers, max_k + 2, [&](CounterRng& rng, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    std::size_t tau = simulate_sequential_attachment(parent, d, cap, rng);
    out[0] = static_cast<double>(tau);
    if (tau <= max_k) out[1 + tau] = 1;
  });
  StoppingTimeEstimate e;
  e.mean = m[0].to_estimate(opts.rng);
  for (std::size_t k = 0; k <= max_k; ++k) e.pmf.push_back(m[1 + k].to_estimate(opts.rng));
  return e;
}

double estimate_n_for_connectivity(double r) {
  require(r > 0 && r < 1, "d/s must lie in (0, 1)");
  const double e = std::numbers::e;
  if (r >= 1 / e) return e - 1;
  auto g = [r](double y) { return std::log(y) / y - r; };
  double lo = e, hi = 2 * e;
  while (g(hi) > 0) {
    lo = hi;
    hi *= 2;
  }
  for (int it = 0; it < 2000; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 1e-12 * lo) break;
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) - 1;
}

double estimate_n_lambert(double r) {
  require(r > 0 && r <= 1 / std::numbers::e, "d/s must lie in (0, 1/e]");
  return std::exp(-boost::math::lambert_wm1(-r)) - 1;
}

PopulationState population_trajectory(const PopulationState& start, double t) {
  require(start.attached >= 0 && start.detached >= 0, "populations must be nonnegative");
  require(start.r_ad > 0 && start.r_da > 0, "rates must be positive");
  require(t >= 0, "time must be nonnegative");
  const double total = start.total();
  const double target = total * start.r_da / (start.r_ad + start.r_da);
  PopulationState out = start;
  out.attached = target + (start.attached - target) * std::exp(-(start.r_ad + start.r_da) * t);
  out.detached = total - out.attached;
  return out;
}

PopulationState equilibrium(double total, double r_ad, double r_da) {
  require(total >= 0, "total population must be nonnegative");
  require(r_ad > 0 && r_da > 0, "rates must be positive");
  PopulationState s;
  s.r_ad = r_ad;
  s.r_da = r_da;
  s.attached = total * r_da / (r_ad + r_da);
  s.detached = total - s.attached;
  return s;
}

}  // namespace bcov
