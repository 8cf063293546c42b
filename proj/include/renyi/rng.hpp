#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace renyi {

// splitmix64 stream. Seedable and splittable; output is fixed by the seed
// alone (no platform-dependent distribution code), so sweeps reproduce
// bit-exactly anywhere.
class Rng {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller
  double normal() {
    double u1 = 1.0 - uniform();  // (0,1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // standard complex normal, E|z|^2 = 1
  std::complex<double> cnormal() {
    return {normal() * M_SQRT1_2, normal() * M_SQRT1_2};
  }

  // independent child stream
  Rng split(std::uint64_t stream) {
    return Rng(derive(next_u64(), stream));
  }

  // stateless seed derivation for per-trial streams
  static std::uint64_t derive(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    return z ^ (z >> 27);
  }

 private:
  std::uint64_t state_;
};

}  // namespace renyi
