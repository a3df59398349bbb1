#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace socgrad {

/// Counter-based 64-bit generator (SplitMix64). Output is a pure function of
/// the seed and the number of calls, identical on every platform, which is
/// what makes sample sets and simulated trajectories reproducible bitwise.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// One Box-Muller pair of independent standard normals. Consumes exactly
  /// two uniforms; the first is mapped to (0, 1] so the log is finite.
  void normal_pair(double& z0, double& z1);

 private:
  std::uint64_t state_;
};

/// Standard normal vector scaled by `stddev`. Draws ceil(dim/2) Box-Muller
/// pairs in order and discards the unused half of the last pair when dim is
/// odd, so the number of generator calls per invocation is fixed by dim.
Eigen::VectorXd normal_vector(SplitMix64& rng, Eigen::Index dim, double stddev);

/// Independent stream seed derived from a base seed and a salt.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace socgrad
