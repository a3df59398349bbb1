#include "socgrad/box.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace socgrad {

Box::Box(Eigen::VectorXd lo, Eigen::VectorXd hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size() || lower.size() < 1) {
    throw std::invalid_argument("Box: bound dimensions mismatch or empty");
  }
  for (Eigen::Index d = 0; d < lower.size(); ++d) {
    if (!(lower[d] < upper[d])) {
      throw std::invalid_argument("Box: lower[" + std::to_string(d) +
                                  "] must be strictly below upper[" +
                                  std::to_string(d) + "]");
    }
  }
}

Box Box::interval(double lo, double hi) {
  Eigen::VectorXd l(1), u(1);
  l[0] = lo;
  u[0] = hi;
  return Box(std::move(l), std::move(u));
}

bool Box::contains(const Eigen::VectorXd& p) const {
  if (p.size() != lower.size()) {
    return false;
  }
  return (p.array() >= lower.array()).all() && (p.array() <= upper.array()).all();
}

Eigen::VectorXd Box::clamp(const Eigen::VectorXd& p) const {
  return p.cwiseMax(lower).cwiseMin(upper);
}

}  // namespace socgrad
