#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "geopair/common.hpp"

namespace geopair {

// splitmix64 finalizer, used to derive independent stream seeds.
inline uint64_t mix64(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG with explicit distributions so results do not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return engine_(); }

  // Forked streams depend only on the original seed, not on how much of this
  // stream has been consumed.
  Rng fork(uint64_t salt) const { return Rng(mix64(seed_, salt)); }

  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    require(lo <= hi, "Rng::uniform_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    cached_ = radius * std::sin(2.0 * kPi * u2);
    has_cached_ = true;
    return radius * std::cos(2.0 * kPi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Rejection-sampled normal truncated to [-clip, clip] standard deviations.
  double truncated_normal(double stddev, double clip = 2.0) {
    for (;;) {
      const double x = normal();
      if (std::abs(x) <= clip) return x * stddev;
    }
  }

  // Shuffles indices [0, n) and returns the first k (sample w/o replacement).
  std::vector<int> sample_indices(int n, int k) {
    require(k >= 0 && k <= n, "Rng::sample_indices: k out of range");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(next_u64() % static_cast<uint64_t>(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  uint64_t seed_ = 0;
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace geopair
