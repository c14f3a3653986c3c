#pragma once

// Seeded simulation oracles for every exact quantity in the library.
//
// Estimators split the trials into fixed blocks of kTrialsPerBlock; block b
// draws from derive_stream(rng, b) and the per-block moments are merged in
// block order, so results depend on (seed, stream, trials) only, never on
// the worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bcov/geometry.hpp"
#include "bcov/parents.hpp"
#include "bcov/rng.hpp"

namespace bcov {

inline constexpr std::uint64_t kTrialsPerBlock = 4096;

struct Estimate {
  double mean = 0;
  double stderr_ = 0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  RngSpec seed;

  /// |mean - value| <= k * stderr (exact match required when stderr is 0).
  bool agrees_with(double value, double k = 3.0) const;
};

struct McOptions {
  std::uint64_t trials = 100000;
  RngSpec rng;
  unsigned workers = 1;
};

/// Running mean/variance (Welford), mergeable in a fixed order.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x);
  void merge(const Moments& o);
  Estimate to_estimate(const RngSpec& seed) const;
};

/// Runs `trial(rng, out)` `trials` times; `out` has `stat_count` slots that
/// the trial fills. Returns one Moments per statistic.
std::vector<Moments> run_trials(std::uint64_t trials, const RngSpec& rng, unsigned workers, std::size_t stat_count,
                                const std::function<void(CounterRng&, std::span<double>)>& trial);

Configuration sample_iid_config(const ParentDistribution& parent, std::size_t n, CounterRng& rng);
Configuration sample_inid_config(const InidFamily& family, CounterRng& rng);
/// Uniform point of the slack simplex {slacks >= 0, sum = s} from n + 1
/// normalized exponential draws. s = 0 gives all zeros.
std::vector<double> sample_uniform_slacks(double s, std::size_t n, CounterRng& rng);

struct IidScenario {
  ParentDistribution parent;
  std::size_t n = 0;
};

/// `window`, when set, evaluates connectivity on [0, window] using only the
/// robots that land there.
struct InidScenario {
  InidFamily family;
  std::optional<double> window;
};

/// iid draws conditioned on being collision-free for diameter R (rejection).
struct CfScenario {
  ParentDistribution parent;
  std::size_t n = 0;
  double R = 0;
};

using Scenario = std::variant<IidScenario, InidScenario, CfScenario>;

/// Attempts allowed per accepted collision-free configuration.
inline constexpr std::uint64_t kMaxRejectionAttempts = 10'000'000;

/// Bernoulli mean of is_connected. CF scenarios throw CapacityError when the
/// acceptance rate is below 1e-6 (known exactly for uniform parents) or a
/// sample exhausts kMaxRejectionAttempts.
Estimate estimate_pcon(const Scenario& scenario, const ThresholdProfile& profile, const McOptions& opts);

Configuration sample_cf_config(const ParentDistribution& parent, std::size_t n, double R, CounterRng& rng);

struct GraphStatsEstimate {
  Estimate connected;
  Estimate components;
  Estimate coverage;
  Estimate edges;
};

GraphStatsEstimate estimate_graph_stats(const ParentDistribution& parent, double d, std::size_t n,
                                        const McOptions& opts);

struct HitAndRunOptions {
  std::optional<std::uint64_t> burn_in;  // default 1000 n
  std::optional<std::uint64_t> thin;     // default n
  std::uint64_t count = 1000;
};

/// Approximately uniform slack vectors over {slacks >= 0, sum = s,
/// slack_i <= d_i} by hit-and-run: random direction in the sum-zero
/// subspace, exact chord against the box and nonnegativity constraints,
/// uniform point on the chord. Starts at the thresholds clipped to s and
/// scaled to sum s. Every emitted vector is checked with slacks_connected.
std::vector<std::vector<double>> hit_and_run_connected(double s, const ThresholdProfile& profile, std::size_t n,
                                                       const HitAndRunOptions& opts, const RngSpec& rng);

/// Robots aim at `destinations` and land at destination + N(0, scale * destination),
/// clamped to [0, s]; Bernoulli mean of connectivity with threshold d.
Estimate noisy_attachment_pcon(std::span<const double> destinations, double s, double d, double variance_scale,
                               const McOptions& opts);

}  // namespace bcov
