#pragma once

// Random sequential adsorption (Renyi parking) on [0, s] and the fixed-n
// collision-free sampler.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcov/geometry.hpp"
#include "bcov/montecarlo.hpp"
#include "bcov/rational.hpp"
#include "bcov/rng.hpp"

namespace bcov {

/// Relative tolerance used by the float jam and overlap checks.
inline constexpr double kJamTolerance = 1e-12;

template <class T>
struct BasicParkingResult {
  T s{};
  T R{};
  std::vector<T> positions;  // sorted left endpoints
  std::size_t count = 0;
  double density = 0;  // count * R / s
};

using ParkingResult = BasicParkingResult<double>;
using ExactParkingResult = BasicParkingResult<Rational>;

/// Cars of length R arrive one at a time, each uniform over every admissible
/// left endpoint (gaps weighted by gap - R), until no gap admits a car. A gap
/// of length exactly R (only the initial one in practice) takes its car at
/// its left end. O(log N) per car through a sum tree over gap slots.
ParkingResult simulate_parking(double s, double R, CounterRng& rng);

/// Same process in exact rationals with a linear scan; for s <= 50.
ExactParkingResult simulate_parking_exact(const Rational& s, const Rational& R, CounterRng& rng);

/// No gap (including both ends) can take another car and cars do not overlap.
bool is_jammed(const ParkingResult& r);
bool is_jammed(const ExactParkingResult& r);

/// Mean of count * R / s over trials.
Estimate jamming_density_estimate(double s, double R, const McOptions& opts);

/// Uniform collision-free configuration of n diameter-R robots on [0, s]:
/// uniform free slacks on s - nR plus the (i-1)R offsets.
Configuration n_parking_sample(double s, double R, std::size_t n, CounterRng& rng);

struct PositionHistogram {
  double lo = 0;
  double hi = 0;  // s - R
  double bin_width = 0;
  std::vector<double> mass;     // mean per-trial fraction of cars in each bin; sums to 1
  std::vector<double> density;  // mass / bin_width (mass itself when hi == lo)
  std::vector<double> stderr_;  // standard error of each mass entry
  std::uint64_t trials = 0;
};

/// Occupancy histogram of car left endpoints over [0, s - R].
PositionHistogram empirical_position_histogram(double s, double R, std::size_t bins, const McOptions& opts);

}  // namespace bcov
