#pragma once

// Counter-based random numbers. The generator is Philox4x32-10 (Salmon et
// al., "Parallel random numbers: as easy as 1, 2, 3"); the 64-bit seed is the
// key, the upper half of the 128-bit counter is the stream id and the lower
// half counts output blocks. Substreams are derived arithmetically, so a
// (seed, stream) pair fixes every draw independent of threading.

#include <array>
#include <cstdint>
#include <limits>

namespace bcov {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Substream `index` of `parent`: same seed, stream = mix64(stream ^ mix64(index)).
constexpr RngSpec derive_stream(const RngSpec& parent, std::uint64_t index) {
  return {parent.seed, mix64(parent.stream ^ mix64(index))};
}

using PhiloxBlock = std::array<std::uint32_t, 4>;

/// One Philox4x32-10 evaluation.
PhiloxBlock philox4x32_10(PhiloxBlock counter, std::array<std::uint32_t, 2> key);

class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  explicit CounterRng(RngSpec spec = {}) : spec_(spec) {}

  result_type operator()();

  /// [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  /// (0, 1).
  double uniform_positive() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }
  double exponential();
  /// Standard normal (Box-Muller, one cached value).
  double normal();

  const RngSpec& spec() const { return spec_; }

 private:
  RngSpec spec_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  bool has_normal_ = false;
  double cached_normal_ = 0;
};

}  // namespace bcov
