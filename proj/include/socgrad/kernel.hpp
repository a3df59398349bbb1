#pragma once

#include <Eigen/Core>

namespace socgrad {

/// Gaussian kernel parameters. The bandwidth is shared across the dimensions
/// of one input space; states and controls each carry their own instance.
class KernelParams {
 public:
  /// Throws std::invalid_argument unless bandwidth > 0 and finite.
  explicit KernelParams(double bandwidth);

  double bandwidth() const { return bandwidth_; }
  double inv_two_sigma_sq() const { return inv_two_sigma_sq_; }
  double inv_sigma_sq() const { return inv_sigma_sq_; }

 private:
  double bandwidth_;
  double inv_two_sigma_sq_;
  double inv_sigma_sq_;
};

/// Symmetric positive semidefinite matrix of product-kernel evaluations over
/// the sample's (state, control) pairs. Unit diagonal by construction.
struct GramMatrix {
  Eigen::MatrixXd entries;
  Eigen::Index dim() const { return entries.rows(); }
};

/// exp(-|a - b|^2 / (2 sigma^2)). Throws on dimension mismatch.
double eval_kernel(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const KernelParams& params);

/// Partial derivative of eval_kernel with respect to its first argument:
/// component d is -((a_d - b_d) / sigma^2) * eval_kernel(a, b).
Eigen::VectorXd eval_kernel_partial(const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b,
                                    const KernelParams& params);

/// Kernel evaluations of a query against M anchor points (anchors are rows).
/// Component i equals eval_kernel(anchors.row(i), query, params).
Eigen::VectorXd kernel_vector(const Eigen::VectorXd& query,
                              const Eigen::MatrixXd& anchors,
                              const KernelParams& params);

/// Product Gram matrix: G(i, j) = k(x_i, x_j) * l(u_i, u_j). Rows of `xs`
/// and `us` pair up, so both must have the same number of rows.
GramMatrix gram_product(const Eigen::MatrixXd& xs, const Eigen::MatrixXd& us,
                        const KernelParams& state_kernel,
                        const KernelParams& control_kernel);

}  // namespace socgrad
