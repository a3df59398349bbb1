#include "socgrad/rng.hpp"

#include <cmath>
#include <numbers>

namespace socgrad {

void SplitMix64::normal_pair(double& z0, double& z1) {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(theta);
  z1 = r * std::sin(theta);
}

Eigen::VectorXd normal_vector(SplitMix64& rng, Eigen::Index dim, double stddev) {
  Eigen::VectorXd out(dim);
  for (Eigen::Index i = 0; i < dim; i += 2) {
    double z0 = 0.0, z1 = 0.0;
    rng.normal_pair(z0, z1);
    out[i] = stddev * z0;
    if (i + 1 < dim) {
      out[i + 1] = stddev * z1;
    }
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  SplitMix64 g(base ^ (0x9E3779B97F4A7C15ull * (salt + 1)));
  g.next();
  return g.next();
}

}  // namespace socgrad
