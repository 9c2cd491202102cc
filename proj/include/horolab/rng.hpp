// Deterministic seeded RNG with counter-splitting. All randomness in the
// library flows from one user seed; independent streams are derived by
// hashing (seed, stream indices), so parallel loops stay reproducible.

#pragma once

#include <cmath>
#include <cstdint>

namespace horolab {

// stateless finalizer (splitmix64 mixer)
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t splitmix64(uint64_t& state) {
  return mix64(state += 0x9E3779B97F4A7C15ULL);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix64(seed ^ 0x5851F42D4C957F2DULL)) {}

  // Derived stream: a hash chain over (seed, a, b) so that nearby indices
  // yield fully decorrelated streams.
  static Rng stream(uint64_t seed, uint64_t a, uint64_t b = 0) {
    uint64_t s = mix64(seed + 0x9E3779B97F4A7C15ULL);
    s = mix64(s ^ (a + 0xC2B2AE3D27D4EB4FULL));
    s = mix64(s ^ (b * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL));
    return Rng(s);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + uniform() * (b - a); }

  // strictly positive uniform, for logs
  double uniform_pos() {
    double u = uniform();
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  uint64_t below(uint64_t n) { return next_u64() % n; }

  double normal() {
    double u1 = uniform_pos();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace horolab
