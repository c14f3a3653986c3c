#include "bcov/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "bcov/errors.hpp"

namespace bcov {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool Estimate::agrees_with(double value, double k) const {
  if (stderr_ == 0) return mean == value;
  return std::abs(mean - value) <= k * stderr_;
}

void Moments::add(double x) {
  ++n;
  double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

void Moments::merge(const Moments& o) {
  if (o.n == 0) return;
  if (n == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
  const double total = na + nb;
  const double delta = o.mean - mean;
  mean += delta * nb / total;
  m2 += o.m2 + delta * delta * na * nb / total;
  n += o.n;
}

Estimate Moments::to_estimate(const RngSpec& seed) const {
  Estimate e;
  e.mean = mean;
  e.samples = n;
  e.seed = seed;
  e.stderr_ = n >= 2 ? std::sqrt(std::max(0.0, m2 / static_cast<double>(n - 1)) / static_cast<double>(n)) : 0.0;
  return e;
}

std::vector<Moments> run_trials(std::uint64_t trials, const RngSpec& rng, unsigned workers, std::size_t stat_count,
                                const std::function<void(CounterRng&, std::span<double>)>& trial) {
  require(trials >= 2, "an estimate needs at least two trials");
  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<std::vector<Moments>> per_block(blocks, std::vector<Moments>(stat_count));
  std::vector<std::exception_ptr> errors(blocks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    std::vector<double> out(stat_count);
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      try {
        CounterRng gen(derive_stream(rng, b));
        const std::uint64_t begin = b * kTrialsPerBlock;
        const std::uint64_t end = std::min(trials, begin + kTrialsPerBlock);
        for (std::uint64_t t = begin; t < end; ++t) {
          trial(gen, out);
          for (std::size_t k = 0; k < stat_count; ++k) per_block[b][k].add(out[k]);
        }
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Moments> total(stat_count);
  for (const auto& block : per_block)
    for (std::size_t k = 0; k < stat_count; ++k) total[k].merge(block[k]);
  return total;
}

Configuration sample_iid_config(const ParentDistribution& parent, std::size_t n, CounterRng& rng) {
  std::vector<double> x(n);
  for (auto& v : x) v = parent.inverse_cdf(rng.uniform());
  return Configuration::from_unsorted(parent.support(), std::move(x));
}

Configuration sample_inid_config(const InidFamily& family, CounterRng& rng) {
  std::vector<double> x;
  x.reserve(family.size());
  for (const auto& p : family.parents()) x.push_back(p.inverse_cdf(rng.uniform()));
  return Configuration::from_unsorted(family.length(), std::move(x));
}

std::vector<double> sample_uniform_slacks(double s, std::size_t n, CounterRng& rng) {
  require(s >= 0, "boundary length must be nonnegative");
  std::vector<double> e(n + 1);
  double total = 0;
  for (auto& v : e) {
    v = rng.exponential();
    total += v;
  }
  for (auto& v : e) v = s * (v / total);
  return e;
}

Configuration sample_cf_config(const ParentDistribution& parent, std::size_t n, double R, CounterRng& rng) {
  for (std::uint64_t attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
    Configuration c = sample_iid_config(parent, n, rng);
    if (is_collision_free(c, R)) return c;
  }
  throw CapacityError("collision-free rejection sampling exceeded " + std::to_string(kMaxRejectionAttempts) +
                      " attempts for one configuration");
}

namespace {

void check_cf_feasible(const CfScenario& cf) {
  require(cf.R >= 0, "robot diameter must be nonnegative");
  const double s = cf.parent.support();
  const double free = s - static_cast<double>(cf.n) * cf.R;
  require(free >= 0, "infeasible: n robots of diameter R do not fit on [0, s]");
  if (std::holds_alternative<UniformParent>(cf.parent.kind()) && cf.n > 0) {
    double acceptance = std::pow(free / s, static_cast<double>(cf.n));
    if (acceptance < 1e-6)
      throw CapacityError("collision-free acceptance rate " + std::to_string(acceptance) + " is below 1e-6");
  }
}

}  // namespace

Estimate estimate_pcon(const Scenario& scenario, const ThresholdProfile& profile, const McOptions& opts) {
  std::function<void(CounterRng&, std::span<double>)> trial;
  std::visit(overloaded{
                 [&](const IidScenario& sc) {
                   profile.check_slack_count(sc.n + 1);
                   trial = [&sc, &profile](CounterRng& rng, std::span<double> out) {
                     out[0] = is_connected(sample_iid_config(sc.parent, sc.n, rng), profile) ? 1.0 : 0.0;
                   };
                 },
                 [&](const InidScenario& sc) {
                   if (sc.window) {
                     require(profile.is_homogeneous(), "windowed connectivity needs a homogeneous threshold");
                     require(*sc.window > 0 && *sc.window <= sc.family.length(), "window must lie in (0, s]");
                     trial = [&sc, &profile](CounterRng& rng, std::span<double> out) {
                       Configuration c = sample_inid_config(sc.family, rng);
                       std::vector<double> kept;
                       for (double x : c.positions())
                         if (x <= *sc.window) kept.push_back(x);
                       out[0] = is_connected(Configuration(*sc.window, std::move(kept)), profile) ? 1.0 : 0.0;
                     };
                   } else {
                     profile.check_slack_count(sc.family.size() + 1);
                     trial = [&sc, &profile](CounterRng& rng, std::span<double> out) {
                       out[0] = is_connected(sample_inid_config(sc.family, rng), profile) ? 1.0 : 0.0;
                     };
                   }
                 },
                 [&](const CfScenario& sc) {
                   profile.check_slack_count(sc.n + 1);
                   check_cf_feasible(sc);
                   trial = [&sc, &profile](CounterRng& rng, std::span<double> out) {
                     out[0] = is_connected(sample_cf_config(sc.parent, sc.n, sc.R, rng), profile) ? 1.0 : 0.0;
                   };
                 },
             },
             scenario);
  return run_trials(opts.trials, opts.rng, opts.workers, 1, trial)[0].to_estimate(opts.rng);
}

GraphStatsEstimate estimate_graph_stats(const ParentDistribution& parent, double d, std::size_t n,
                                        const McOptions& opts) {
  require(d > 0, "threshold must be positive");
  auto m = run_trials(opts.trials, opts.rng, opts.workers, 4, [&](CounterRng& rng, std::span<double> out) {
    GraphStats g = graph_stats(sample_iid_config(parent, n, rng), d);
    out[0] = g.connected ? 1.0 : 0.0;
    out[1] = static_cast<double>(g.components);
    out[2] = g.coverage;
    out[3] = static_cast<double>(g.edges);
  });
  return {m[0].to_estimate(opts.rng), m[1].to_estimate(opts.rng), m[2].to_estimate(opts.rng),
          m[3].to_estimate(opts.rng)};
}

std::vector<std::vector<double>> hit_and_run_connected(double s, const ThresholdProfile& profile, std::size_t n,
                                                       const HitAndRunOptions& opts, const RngSpec& rng_spec) {
  require(s > 0, "boundary length must be positive");
  require(n >= 1, "hit-and-run needs at least one robot (the region is a point for n = 0)");
  profile.check_slack_count(n + 1);
  const std::size_t dim = n + 1;
  std::vector<double> cap(dim);
  double cap_sum = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    cap[i] = std::min(profile.at(i), s);
    cap_sum += cap[i];
  }
  require(cap_sum > s * (1 + 1e-12), "favorable region has empty interior");

  std::vector<double> x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = cap[i] * (s / cap_sum);

  const std::uint64_t burn_in = opts.burn_in.value_or(1000 * n);
  const std::uint64_t thin = std::max<std::uint64_t>(1, opts.thin.value_or(n));
  CounterRng rng(rng_spec);
  std::vector<double> u(dim);

  auto step = [&] {
    double norm = 0;
    do {
      double mean = 0;
      for (auto& v : u) {
        v = rng.normal();
        mean += v;
      }
      mean /= static_cast<double>(dim);
      norm = 0;
      for (auto& v : u) {
        v -= mean;
        norm += v * v;
      }
    } while (norm < 1e-24);
    norm = std::sqrt(norm);
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dim; ++i) {
      u[i] /= norm;
      if (u[i] > 0) {
        lo = std::max(lo, -x[i] / u[i]);
        hi = std::min(hi, (cap[i] - x[i]) / u[i]);
      } else if (u[i] < 0) {
        lo = std::max(lo, (cap[i] - x[i]) / u[i]);
        hi = std::min(hi, -x[i] / u[i]);
      }
    }
    if (!(hi > lo)) return;  // degenerate chord (point on a face in float); keep x
    double t = lo + (hi - lo) * rng.uniform();
    double sum = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = std::clamp(x[i] + t * u[i], 0.0, cap[i]);
      sum += x[i];
    }
    // restore sum = s on the coordinate with the most room
    double residual = s - sum;
    if (residual != 0) {
      std::size_t best = 0;
      double room = -1;
      for (std::size_t i = 0; i < dim; ++i) {
        double r = residual > 0 ? cap[i] - x[i] : x[i];
        if (r > room) {
          room = r;
          best = i;
        }
      }
      x[best] = std::clamp(x[best] + residual, 0.0, cap[best]);
    }
  };

  for (std::uint64_t i = 0; i < burn_in; ++i) step();
  std::vector<std::vector<double>> out;
  out.reserve(opts.count);
  while (out.size() < opts.count) {
    for (std::uint64_t i = 0; i < thin; ++i) step();
    if (!slacks_connected<double>(x, profile)) throw std::logic_error("hit-and-run left the favorable region");
    out.push_back(x);
  }
  return out;
}

Estimate noisy_attachment_pcon(std::span<const double> destinations, double s, double d, double variance_scale,
                               const McOptions& opts) {
  require(s > 0 && d > 0, "s and d must be positive");
  require(variance_scale >= 0, "variance scale must be nonnegative");
  for (double x : destinations) require(x >= 0 && x <= s, "destination outside [0, s]");
  std::vector<double> sigma;
  sigma.reserve(destinations.size());
  for (double x : destinations) sigma.push_back(std::sqrt(variance_scale * x));
  const auto profile = ThresholdProfile::homogeneous(d);
  std::vector<double> dest(destinations.begin(), destinations.end());
  auto m = run_trials(opts.trials, opts.rng, opts.workers, 1, [&](CounterRng& rng, std::span<double> out) {
    std::vector<double> landed(dest.size());
    for (std::size_t i = 0; i < dest.size(); ++i)
      landed[i] = std::clamp(dest[i] + sigma[i] * rng.normal(), 0.0, s);
    out[0] = is_connected(Configuration::from_unsorted(s, std::move(landed)), profile) ? 1.0 : 0.0;
  });
  return m[0].to_estimate(opts.rng);
}

}  // namespace bcov
