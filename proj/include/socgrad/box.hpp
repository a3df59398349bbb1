#pragma once

#include <Eigen/Core>

namespace socgrad {

/// Axis-aligned box with strictly ordered bounds. Used both as the compact
/// control set and as the state region samples are drawn from.
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Box(Eigen::VectorXd lo, Eigen::VectorXd hi);

  /// 1-D convenience.
  static Box interval(double lo, double hi);

  Eigen::Index dim() const { return lower.size(); }
  bool contains(const Eigen::VectorXd& p) const;
  Eigen::VectorXd clamp(const Eigen::VectorXd& p) const;
  Eigen::VectorXd center() const { return 0.5 * (lower + upper); }
};

}  // namespace socgrad
