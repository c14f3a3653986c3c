#pragma once

// Stopping time under sequential attachment, the Lambert-W size estimate and
// the two-state attach/detach population model.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcov/montecarlo.hpp"
#include "bcov/parents.hpp"
#include "bcov/rng.hpp"

namespace bcov {

/// Connection probabilities p_0, p_1, ... (index = robot count); nondecreasing
/// values in [0, 1].
class PconSequence {
 public:
  explicit PconSequence(std::vector<double> p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const { return p_; }
  /// First index with p_i > 0 (size() if there is none).
  std::size_t n_min() const;

 private:
  std::vector<double> p_;
};

/// tau_0 = p_0 and tau_i = (1 - p_{i-1}) p_i for i = 1..horizon. Not
/// normalized; the factors are treated as independent even though the
/// attachment events are not. horizon < p.size().
std::vector<double> stopping_pmf_formula(const PconSequence& p, std::size_t horizon);

struct StoppingTimeReport {
  double mean = 0;            // sum i tau_i up to the horizon
  double mass = 0;            // sum tau_i up to the horizon
  double reciprocal_bound = 0;  // 1 / p_{n_min}
  double geometric_mean = 0;  // n_min - 1 + 1 / p_{n_min}
  bool horizon_warning = false;  // mass < 0.999
};

StoppingTimeReport expected_stopping_time_formula(const PconSequence& p, std::size_t horizon);

/// Draws one robot position per step into a persistent configuration and
/// returns the first robot count at which it is connected (0 when d >= s).
/// Throws CapacityError after `cap` robots.
std::size_t simulate_sequential_attachment(const ParentDistribution& parent, double d, std::size_t cap,
                                           CounterRng& rng);

struct StoppingTimeEstimate {
  Estimate mean;
  std::vector<Estimate> pmf;  // pmf[k] estimates P(tau = k), k = 0..max_k
};

StoppingTimeEstimate estimate_stopping_time(const ParentDistribution& parent, double d, std::size_t cap,
                                            std::size_t max_k, const McOptions& opts);

/// Larger root y >= e of log(y) / y = d/s by bisection, returned as n = y - 1.
/// d/s >= 1/e gives e - 1.
double estimate_n_for_connectivity(double d_over_s);
/// exp(-W_{-1}(-d/s)) - 1, for d/s in (0, 1/e].
double estimate_n_lambert(double d_over_s);

struct PopulationState {
  double attached = 0;  // N_A
  double detached = 0;  // N_D
  double r_ad = 0;      // attached -> detached rate
  double r_da = 0;      // detached -> attached rate

  double total() const { return attached + detached; }
};

/// Closed-form solution of dN_A/dt = -r_AD N_A + r_DA N_D, N_A + N_D fixed.
PopulationState population_trajectory(const PopulationState& start, double t);
/// N_A* = total r_DA / (r_AD + r_DA).
PopulationState equilibrium(double total, double r_ad, double r_da);

}  // namespace bcov
