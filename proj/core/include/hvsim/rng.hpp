#pragma once

// Deterministic random streams.  Every consumer owns a (seed, stream)
// pair; distinct streams from one seed are decorrelated by mixing both
// through splitmix64 before seeding the engine.  The engine and all
// distributions are pinned here (mt19937_64 plus hand-rolled uniform
// and Box-Muller) so results are bit-identical across platforms;
// std::uniform_real_distribution et al. are deliberately not used.

#include <cmath>
#include <cstdint>
#include <random>

namespace hvsim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
    std::uint64_t state = seed;
    std::uint64_t mixed = splitmix64(state);
    state ^= 0xd1b54a32d192ed03ULL * (stream_id + 1);
    mixed ^= splitmix64(state);
    engine_.seed(mixed);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) from the top 53 bits.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the paired variate is cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u == 0.0);
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * kPi * uniform();
    cached_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
  double cached_{};
  bool has_cached_{false};
};

}  // namespace hvsim
