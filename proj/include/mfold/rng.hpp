#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace mfold {

// Counter-based generator built on the splitmix64 finalizer. A stream is a
// pure function of (seed, index), so drawing sample #i gives the same values
// whether samples are visited serially, in parallel, or out of order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed) ^ mix(index + 0x9E3779B97F4A7C15ull));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0, 1), 53 usable bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Uniform on the closed disk of the given radius (area measure).
  std::complex<double> disk(double radius) {
    const double r = radius * std::sqrt(next_double());
    const double t = two_pi() * next_double();
    return {r * std::cos(t), r * std::sin(t)};
  }

  std::complex<double> unit_circle() {
    const double t = two_pi() * next_double();
    return {std::cos(t), std::sin(t)};
  }

 private:
  static constexpr double two_pi() { return 6.283185307179586476925286766559; }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace mfold
