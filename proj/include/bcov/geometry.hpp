#pragma once

// Boundary/configuration value types and the per-configuration graph
// functionals (connectivity, components, coverage, edges). Everything is a
// template over the scalar so that the same predicate exists for doubles and
// for exact rationals; the rational flavor is what tests use as the oracle.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bcov/errors.hpp"
#include "bcov/rational.hpp"

namespace bcov {

template <class T>
inline T zero_of() {
  return T(0);
}

/// Sorted robot positions on [0, s] together with the induced slacks
/// (gaps between consecutive robots, with artificial robots at 0 and s).
///
/// A zero-length boundary is accepted: it is what the free-slack transform
/// produces for a saturated collision-free configuration.
template <class T>
class BasicConfiguration {
 public:
  BasicConfiguration() : length_(0), slacks_{zero_of<T>()} {}

  BasicConfiguration(T length, std::vector<T> positions)
      : length_(std::move(length)), positions_(std::move(positions)) {
    require(length_ >= 0, "boundary length must be nonnegative");
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      require(positions_[i] >= 0 && positions_[i] <= length_, "position outside [0, s]");
      require(i == 0 || positions_[i - 1] <= positions_[i], "positions are not sorted");
    }
    slacks_.reserve(positions_.size() + 1);
    T prev = zero_of<T>();
    for (const T& x : positions_) {
      slacks_.push_back(x - prev);
      prev = x;
    }
    slacks_.push_back(length_ - prev);
  }

  /// Builds a configuration from unsorted draws.
  static BasicConfiguration from_unsorted(T length, std::vector<T> positions) {
    std::sort(positions.begin(), positions.end());
    return BasicConfiguration(std::move(length), std::move(positions));
  }

  /// Inverse of slacks(): positions are the cumulative sums of all but the
  /// last slack.
  static BasicConfiguration from_slacks(std::span<const T> slacks) {
    require(!slacks.empty(), "a slack vector has at least one entry");
    std::vector<T> pos;
    pos.reserve(slacks.size() - 1);
    T acc = zero_of<T>();
    for (std::size_t i = 0; i + 1 < slacks.size(); ++i) {
      require(slacks[i] >= 0, "negative slack");
      acc += slacks[i];
      pos.push_back(acc);
    }
    require(slacks.back() >= 0, "negative slack");
    T length = acc + slacks.back();
    if constexpr (std::is_floating_point_v<T>) {
      // cumulative rounding can push the last position past s by an ulp
      for (auto& x : pos) x = std::min(x, length);
    }
    return BasicConfiguration(length, std::move(pos));
  }

  const T& length() const { return length_; }
  std::size_t size() const { return positions_.size(); }
  std::span<const T> positions() const { return positions_; }
  std::span<const T> slacks() const { return slacks_; }

  friend bool operator==(const BasicConfiguration&, const BasicConfiguration&) = default;

 private:
  T length_;
  std::vector<T> positions_;
  std::vector<T> slacks_;
};

using Configuration = BasicConfiguration<double>;
using ExactConfiguration = BasicConfiguration<Rational>;

/// Communication thresholds: one range for every slack, or one per slack.
template <class T>
class BasicThresholdProfile {
 public:
  static BasicThresholdProfile homogeneous(T d) {
    require(d > 0, "threshold must be positive");
    BasicThresholdProfile p;
    p.values_ = {std::move(d)};
    p.homogeneous_ = true;
    return p;
  }
  static BasicThresholdProfile per_slack(std::vector<T> d) {
    require(!d.empty(), "per-slack profile needs at least one threshold");
    for (const T& x : d) require(x > 0, "threshold must be positive");
    BasicThresholdProfile p;
    p.values_ = std::move(d);
    p.homogeneous_ = false;
    return p;
  }

  bool is_homogeneous() const { return homogeneous_; }
  /// Threshold on slack i (0-based).
  const T& at(std::size_t i) const { return homogeneous_ ? values_.front() : values_.at(i); }
  std::span<const T> values() const { return values_; }

  /// Throws unless the profile can be applied to `slack_count` slacks.
  void check_slack_count(std::size_t slack_count) const {
    require(homogeneous_ || values_.size() == slack_count,
            "threshold profile has " + std::to_string(values_.size()) + " entries but configuration has " +
                std::to_string(slack_count) + " slacks");
  }

 private:
  BasicThresholdProfile() = default;
  std::vector<T> values_;
  bool homogeneous_ = true;
};

using ThresholdProfile = BasicThresholdProfile<double>;
using ExactThresholdProfile = BasicThresholdProfile<Rational>;

template <class T>
struct BasicGraphStats {
  bool connected = false;
  std::size_t components = 0;
  T coverage{};
  std::size_t edges = 0;
};

using GraphStats = BasicGraphStats<double>;
using ExactGraphStats = BasicGraphStats<Rational>;

enum class Regime { Empty, Partial, Full };

const char* to_string(Regime r);

// ---------------------------------------------------------------------------

template <class T>
std::vector<T> positions_to_slacks(const BasicConfiguration<T>& config) {
  auto s = config.slacks();
  return {s.begin(), s.end()};
}

/// True iff slack i <= d_i for every slack (closed inequality).
template <class T>
bool slacks_connected(std::span<const T> slacks, const BasicThresholdProfile<T>& profile) {
  profile.check_slack_count(slacks.size());
  for (std::size_t i = 0; i < slacks.size(); ++i)
    if (slacks[i] > profile.at(i)) return false;
  return true;
}

template <class T>
bool is_connected(const BasicConfiguration<T>& config, const BasicThresholdProfile<T>& profile) {
  return slacks_connected<T>(config.slacks(), profile);
}

/// components = 1 + #{slack > d}; coverage = s - sum max(slack - d, 0);
/// edges counts robot pairs (endpoints excluded) within distance d.
template <class T>
BasicGraphStats<T> graph_stats(const BasicConfiguration<T>& config, const T& d) {
  require(d > 0, "threshold must be positive");
  BasicGraphStats<T> g;
  std::size_t unsaturated = 0;
  T excess = zero_of<T>();
  for (const T& sl : config.slacks()) {
    if (sl > d) {
      ++unsaturated;
      excess += sl - d;
    }
  }
  g.components = 1 + unsaturated;
  g.connected = unsaturated == 0;
  g.coverage = config.length() - excess;
  if (g.connected) g.coverage = config.length();
  auto x = config.positions();
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (j < i + 1) j = i + 1;
    while (j < x.size() && x[j] - x[i] <= d) ++j;
    g.edges += j - i - 1;
  }
  return g;
}

/// Empty: d <= s/(n+1) (pcon = 0); Full: d >= s (pcon = 1); otherwise Partial.
/// For n = 0 both bounds coincide at d = s; that single slack is connected, so
/// Full is tested first.
template <class T>
Regime d_regime(const T& s, const T& d, std::size_t n) {
  require(s > 0 && d > 0, "s and d must be positive");
  if (d >= s) return Regime::Full;
  if (d * T(static_cast<long>(n + 1)) <= s) return Regime::Empty;
  return Regime::Partial;
}

/// Robots of diameter R occupy [x, x + R]: x_(1) >= 0, x_(n) <= s - R and
/// consecutive positions at least R apart.
template <class T>
bool is_collision_free(const BasicConfiguration<T>& config, const T& R) {
  require(R >= 0, "robot diameter must be nonnegative");
  auto x = config.positions();
  if (x.empty()) return true;
  if (x.front() < 0 || x.back() > config.length() - R) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] - x[i] < R) return false;
  return true;
}

/// Maps a collision-free configuration of diameter-R robots to point robots
/// on a boundary of length s - nR via x_i -> x_i - (i-1)R.
template <class T>
BasicConfiguration<T> free_slack_transform(const BasicConfiguration<T>& config, const T& R) {
  require(is_collision_free(config, R), "configuration is not collision-free for this diameter");
  auto x = config.positions();
  std::vector<T> out;
  out.reserve(x.size());
  T shift = zero_of<T>();
  for (const T& xi : x) {
    T v = xi - shift;
    if constexpr (std::is_floating_point_v<T>) v = std::max(v, T(0));
    out.push_back(v);
    shift += R;
  }
  T reduced = config.length() - T(static_cast<long>(x.size())) * R;
  if constexpr (std::is_floating_point_v<T>) {
    reduced = std::max(reduced, T(0));
    for (auto& v : out) v = std::min(v, reduced);
  }
  return BasicConfiguration<T>(reduced, std::move(out));
}

/// Inverse of free_slack_transform.
template <class T>
BasicConfiguration<T> inverse_free_slack_transform(const BasicConfiguration<T>& reduced, const T& R) {
  require(R >= 0, "robot diameter must be nonnegative");
  auto x = reduced.positions();
  std::vector<T> out;
  out.reserve(x.size());
  T shift = zero_of<T>();
  for (const T& xi : x) {
    out.push_back(xi + shift);
    shift += R;
  }
  T length = reduced.length() + T(static_cast<long>(x.size())) * R;
  if constexpr (std::is_floating_point_v<T>)
    for (auto& v : out) v = std::min(v, length);
  return BasicConfiguration<T>(length, std::move(out));
}

/// Conversion of an exact configuration to floats.
Configuration to_float(const ExactConfiguration& c);

}  // namespace bcov
