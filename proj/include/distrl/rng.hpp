#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace distrl {

// Seeded random source with hand-rolled draw functions so that a (seed,
// platform) pair fully determines every sequence. std::mt19937_64 is
// portable, but the std <random> distributions are not, so we never use them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Independent child stream. splitmix64 finalizer mixes (seed, id) so that
  // nearby ids do not produce correlated mt19937_64 states.
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1): 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]: shifted so log() is always finite.
  double uniform_pos() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; consumes exactly two draws per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    const int k = static_cast<int>(uniform() * n);
    return k >= n ? n - 1 : k;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace distrl
