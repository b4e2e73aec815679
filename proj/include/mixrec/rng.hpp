#ifndef MIXREC_RNG_HPP
#define MIXREC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace mixrec {

/// Deterministic random source. All variates are generated from the raw
/// mt19937_64 bit stream with fixed algorithms, so a (seed, call sequence)
/// pair always yields the same doubles regardless of platform or standard
/// library version (std::normal_distribution et al. are implementation
/// defined and would not give that guarantee).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1), never exactly 0 (safe under log).
  double uniform_open() {
    double u;
    do {
      u = uniform();
    } while (u == 0.0);
    return u;
  }

  /// Standard normal via Marsaglia's polar method. The second variate of
  /// each pair is cached, so draws come in a fixed order.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    have_spare_ = true;
    return u * factor;
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Independent child source; distinct streams for sub-tasks derived
  /// deterministically from one master seed.
  RandomSource spawn(std::uint64_t stream_id) {
    // splitmix64 of (state draw, stream id) decorrelates child seeds
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL * (stream_id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RandomSource(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mixrec

#endif  // MIXREC_RNG_HPP
