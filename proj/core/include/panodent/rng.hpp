#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace panodent {

// Deterministic PRNG used for everything stochastic in the toolkit (corpus
// generation, augmentation draws, weight init, sampling). splitmix64 core,
// self-contained so streams are reproducible across platforms and compilers,
// unlike std::uniform_*_distribution.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // Stream keyed on (seed, epoch, sample index): reordering a batch does not
  // change any sample's draws.
  static Rng for_sample(uint64_t seed, uint64_t epoch, uint64_t index) {
    uint64_t h = seed;
    h = mix(h ^ (0x9e3779b97f4a7c15ULL + epoch));
    h = mix(h ^ (0xbf58476d1ce4e5b9ULL + index));
    return Rng(h);
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Inclusive on both ends.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

  bool bernoulli(double p) { return u01() < p; }

  double normal(double mean = 0.0, double stddev = 1.0) {
    // Box-Muller; the second variate is discarded to keep the stream simple.
    double u1 = u01();
    double u2 = u01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

  // Fisher-Yates; hand-rolled because std::shuffle's draw sequence is
  // implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace panodent
