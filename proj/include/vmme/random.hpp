#ifndef VMME_RANDOM_HPP
#define VMME_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace vmme {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable random stream. All variate transforms are implemented on top of
// the raw 64-bit output so that a given seed yields the same sample sequence
// on every platform. Single-owner: one stream per user / per run.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double u01_pos() { return 1.0 - u01(); }

  double uniform(double lo, double hi) { return lo + u01() * (hi - lo); }

  double exponential(double mean) { return -mean * std::log(u01_pos()); }

  // Box-Muller; two uniforms per variate, no cached state.
  double normal() {
    const double r = std::sqrt(-2.0 * std::log(u01_pos()));
    const double theta = 6.283185307179586476925286766559 * u01();
    return r * std::cos(theta);
  }

  uint64_t uniform_index(uint64_t n) { return n ? engine_() % n : 0; }

  // Independent substream for (purpose, id), e.g. one per UE. Purposes keep
  // traffic draws stable when mobility parameters change and vice versa.
  static RandomStream derive(uint64_t master_seed, uint64_t purpose, uint64_t id) {
    return RandomStream(splitmix64(splitmix64(splitmix64(master_seed) ^ purpose) ^ id));
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_;
};

namespace stream_purpose {
inline constexpr uint64_t kTraffic = 0x7261666669630001ULL;
inline constexpr uint64_t kMobility = 0x6d6f62696c690002ULL;
inline constexpr uint64_t kQueueNet = 0x716e65740003ULL;
inline constexpr uint64_t kEstimation = 0x657374696d0004ULL;
}  // namespace stream_purpose

}  // namespace vmme

#endif
