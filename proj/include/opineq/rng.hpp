#pragma once

// Seedable, portable random stream. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; the conversions to uniform
// and normal variates are implemented here so that streams do not depend on
// a particular standard library's distributions.
//
// Stream splitting: trial k of a run seeded with s uses
//   Rng::for_trial(s, k)  ==  Rng(splitmix64(s + k * 0x9E3779B97F4A7C15)).

#include <cstdint>
#include <random>

namespace opineq {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Standard normal via Box–Muller (one variate per call).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace opineq
