#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace spb {

/// Counter-based generator: every output is a pure function of
/// (seed, stream, counter), so sequences replay identically across platforms
/// and thread counts.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ 0x9e3779b97f4a7c15ull, stream)) {}

  std::uint64_t next_u64() { return mix(key_, counter_++); }

  /// Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> complex_gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-std::log(u1));  // Re, Im each N(0, 1/2)
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace spb
