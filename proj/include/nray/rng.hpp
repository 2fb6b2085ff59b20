#pragma once

#include <cmath>
#include <cstdint>

namespace nray {

/// SplitMix64: tiny, fast, and every stream is reproducible from its seed.
/// Parallel code derives one independent stream per (point, block) via
/// derive_stream, so results do not depend on worker count or schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0,1]; never returns 0 so logs are safe.
  double u01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Exp(1) by inversion.
  double exponential() { return -std::log(u01()); }

  /// Rayleigh with scale sigma: sigma * sqrt(-2 ln U).
  double rayleigh(double sigma) {
    return sigma * std::sqrt(-2.0 * std::log(u01()));
  }

  /// Standard normal (polar Box-Muller, cached second value).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * u01() - 1.0;
      v = 2.0 * u01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double r = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * r;
    have_cached_ = true;
    return u * r;
  }

  /// Gamma(shape, rate=1) by Marsaglia-Tsang; requires shape >= 1.
  double gamma(double shape) {
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = u01();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Order-independent stream derivation: hash of (base_seed, point, block).
inline std::uint64_t derive_stream(std::uint64_t base_seed, std::uint64_t point,
                                   std::uint64_t block) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base_seed + 0x9e3779b97f4a7c15ULL);
  h = mix(h ^ (point + 0xbf58476d1ce4e5b9ULL));
  h = mix(h ^ (block + 0x94d049bb133111ebULL));
  return h;
}

}  // namespace nray
