#include "bcov/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcov/errors.hpp"

namespace bcov {

namespace {

// Array-backed sum tree; internal nodes are recomputed from their children on
// every update so a subtree of zero weights sums to exactly zero.
class SumTree {
 public:
  explicit SumTree(std::size_t capacity) {
    size_ = 1;
    while (size_ < capacity) size_ *= 2;
    node_.assign(2 * size_, 0.0);
  }

  void set(std::size_t i, double w) {
    std::size_t k = i + size_;
    node_[k] = w;
    for (k /= 2; k >= 1; k /= 2) node_[k] = node_[2 * k] + node_[2 * k + 1];
  }

  double total() const { return node_[1]; }

  // leaf whose cumulative range contains `target`; never returns a zero leaf
  // while total() > 0
  std::size_t find(double target) const {
    std::size_t k = 1;
    while (k < size_) {
      double left = node_[2 * k];
      if ((target < left && left > 0) || node_[2 * k + 1] == 0) {
        k = 2 * k;
      } else {
        target -= left;
        k = 2 * k + 1;
      }
    }
    return k - size_;
  }

 private:
  std::size_t size_;
  std::vector<double> node_;
};

struct Gap {
  double start;
  double length;
};

Rational uniform_rational(CounterRng& rng) {
  Rational u(Integer(static_cast<unsigned long>(rng() >> 11)), Integer(1) << 53);
  u.canonicalize();
  return u;
}

}  // namespace

ParkingResult simulate_parking(double s, double R, CounterRng& rng) {
  require(s > 0, "boundary length must be positive");
  require(R > 0, "car length must be positive");
  require(s / R < 1e9, "boundary too long for the parking simulator");

  ParkingResult res;
  res.s = s;
  res.R = R;
  if (s < R) return res;

  const std::size_t max_cars = static_cast<std::size_t>(std::floor(s / R)) + 1;
  std::vector<Gap> gaps;
  gaps.reserve(2 * max_cars + 1);
  SumTree tree(2 * max_cars + 1);
  std::vector<std::size_t> exact_fit;  // slots holding a gap of length exactly R

  auto add_gap = [&](double start, double length) {
    if (length < R) return;
    gaps.push_back({start, length});
    double w = length - R;
    if (w > 0)
      tree.set(gaps.size() - 1, w);
    else
      exact_fit.push_back(gaps.size() - 1);
  };

  add_gap(0.0, s);
  std::vector<double> cars;
  cars.reserve(max_cars);
  while (true) {
    std::size_t slot;
    double x;
    if (tree.total() > 0) {
      slot = tree.find(rng.uniform() * tree.total());
      const Gap& g = gaps[slot];
      x = g.start + rng.uniform() * (g.length - R);
      tree.set(slot, 0);
    } else if (!exact_fit.empty()) {
      slot = exact_fit.back();
      exact_fit.pop_back();
      x = gaps[slot].start;
    } else {
      break;
    }
    const Gap g = gaps[slot];
    x = std::min(x, g.start + g.length - R);
    cars.push_back(x);
    add_gap(g.start, x - g.start);
    add_gap(x + R, g.start + g.length - (x + R));
  }
  std::sort(cars.begin(), cars.end());
  res.count = cars.size();
  res.positions = std::move(cars);
  res.density = static_cast<double>(res.count) * R / s;
  return res;
}

ExactParkingResult simulate_parking_exact(const Rational& s, const Rational& R, CounterRng& rng) {
  require(sgn(s) > 0, "boundary length must be positive");
  require(sgn(R) > 0, "car length must be positive");
  require(s <= 50, "the exact parking mode is limited to s <= 50");

  struct ExactGap {
    Rational start, length;
  };
  ExactParkingResult res;
  res.s = s;
  res.R = R;
  std::vector<ExactGap> open;
  if (s >= R) open.push_back({Rational(0), s});
  while (!open.empty()) {
    Rational total = 0;
    for (const auto& g : open) total += g.length - R;
    std::size_t pick = 0;
    Rational x;
    if (sgn(total) > 0) {
      Rational target = uniform_rational(rng) * total;
      for (pick = 0; pick + 1 < open.size(); ++pick) {
        Rational w = open[pick].length - R;
        if (target < w) break;
        target -= w;
      }
      x = open[pick].start + uniform_rational(rng) * (open[pick].length - R);
    } else {
      x = open[0].start;
    }
    ExactGap g = open[pick];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    res.positions.push_back(x);
    Rational left = x - g.start;
    Rational right = g.start + g.length - x - R;
    if (left >= R) open.push_back({g.start, left});
    if (right >= R) open.push_back({x + R, right});
  }
  std::sort(res.positions.begin(), res.positions.end());
  res.count = res.positions.size();
  res.density = to_double(Rational(Rational(static_cast<unsigned long>(res.count)) * R / s));
  return res;
}

bool is_jammed(const ParkingResult& r) {
  const double tol = kJamTolerance * std::max(1.0, r.s);
  double prev_end = 0;
  for (double x : r.positions) {
    if (x < -tol || x > r.s - r.R + tol) return false;
    if (x - prev_end >= r.R + tol) return false;
    if (x < prev_end - tol) return false;
    prev_end = x + r.R;
  }
  return r.s - prev_end < r.R + tol;
}

bool is_jammed(const ExactParkingResult& r) {
  Rational prev_end = 0;
  for (const auto& x : r.positions) {
    if (sgn(x) < 0 || x > r.s - r.R) return false;
    if (x < prev_end || x - prev_end >= r.R) return false;
    prev_end = x + r.R;
  }
  return r.s - prev_end < r.R;
}

Estimate jamming_density_estimate(double s, double R, const McOptions& opts) {
  auto m = run_trials(opts.trials, opts.rng, opts.workers, 1, [&](CounterRng& rng, std::span<double> out) {
    out[0] = simulate_parking(s, R, rng).density;
  });
  return m[0].to_estimate(opts.rng);
}

Configuration n_parking_sample(double s, double R, std::size_t n, CounterRng& rng) {
  require(s >= 0 && R >= 0, "s and R must be nonnegative");
  const double packed = static_cast<double>(n) * R;
  require(s >= packed, "infeasible: n robots of diameter R do not fit on [0, s]");
  std::vector<double> slack = sample_uniform_slacks(s - packed, n, rng);
  std::vector<double> x(n);
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = i == 0 ? slack[0] : x[i - 1] + (R + slack[i]);
    while (i > 0 && x[i] - x[i - 1] < R) x[i] = std::nextafter(x[i], HUGE_VAL);
    acc = x[i];
  }
  // pull the tail back inside [0, s - R] if rounding pushed it out
  if (n > 0 && acc > s - R) {
    x[n - 1] = s - R;
    for (std::size_t i = n - 1; i-- > 0;) {
      x[i] = std::min(x[i], x[i + 1] - R);
      while (x[i + 1] - x[i] < R) x[i] = std::nextafter(x[i], -HUGE_VAL);
      x[i] = std::max(x[i], 0.0);
    }
  }
  Configuration c(s, std::move(x));
  if (!is_collision_free(c, R)) throw std::logic_error("parking sample is not collision-free");
  return c;
}

PositionHistogram empirical_position_histogram(double s, double R, std::size_t bins, const McOptions& opts) {
  require(bins >= 1, "need at least one bin");
  require(s >= R && R > 0, "need s >= R > 0");
  PositionHistogram h;
  h.hi = s - R;
  h.bin_width = h.hi / static_cast<double>(bins);
  h.trials = opts.trials;
  auto m = run_trials(opts.trials, opts.rng, opts.workers, bins, [&](CounterRng& rng, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    ParkingResult r = simulate_parking(s, R, rng);
    const double share = 1.0 / static_cast<double>(r.count);
    for (double x : r.positions) {
      std::size_t k = h.bin_width > 0 ? static_cast<std::size_t>(x / h.bin_width) : 0;
      out[std::min(k, bins - 1)] += share;
    }
  });
  for (const auto& bin : m) {
    Estimate e = bin.to_estimate(opts.rng);
    h.mass.push_back(e.mean);
    h.stderr_.push_back(e.stderr_);
    h.density.push_back(h.bin_width > 0 ? e.mean / h.bin_width : e.mean);
  }
  return h;
}

}  // namespace bcov
