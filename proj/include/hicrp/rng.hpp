// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef HICRP_RNG_HPP
#define HICRP_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hicrp {

// Seedable random stream. The engine is std::mt19937_64 (pinned by the
// standard), and all variate algorithms are implemented here rather than
// delegated to std::*_distribution, so a given seed produces the same draws
// on every platform and standard library.
//
// Variate algorithms:
//   uniform01 : top 53 bits of the engine output
//   normal    : Marsaglia polar method
//   gamma     : Marsaglia-Tsang squeeze (shape >= 1), boosted for shape < 1
//   poisson   : inversion by uniform products (mean < 12), PTRS otherwise
//   dirichlet : normalized gammas
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0,1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log() argument.
  double uniform01_open() { return 1.0 - uniform01(); }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n);

  double normal();
  double gamma(double shape);                    // scale 1
  double beta(double a, double b);
  long long poisson(double mean);
  std::vector<double> dirichlet(std::span<const double> concentration);

  // Index drawn proportionally to the (nonnegative) weights.
  std::size_t categorical(std::span<const double> weights);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Deterministic derivation of child streams. `fork_base()` consumes one
  // engine draw; `derive` maps (base, salt) to an independent stream, so
  // per-unit child streams can be created up front and consumed in parallel
  // without making results depend on thread schedule.
  std::uint64_t fork_base() { return eng_(); }
  static Rng derive(std::uint64_t base, std::uint64_t salt);

  Rng child(std::uint64_t salt) { return derive(fork_base(), salt); }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace hicrp

#endif
