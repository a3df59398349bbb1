#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <iosfwd>
#include <memory>
#include <string>

#include "socgrad/kernel.hpp"

namespace socgrad {

/// M observed transitions (x_i, u_i, y_i). Rows are observations; states and
/// successors share the state dimension, controls have their own.
struct SampleSet {
  Eigen::MatrixXd states;      // M x n
  Eigen::MatrixXd controls;    // M x m
  Eigen::MatrixXd successors;  // M x n

  SampleSet(Eigen::MatrixXd xs, Eigen::MatrixXd us, Eigen::MatrixXd ys);

  Eigen::Index size() const { return states.rows(); }
  Eigen::Index state_dim() const { return states.cols(); }
  Eigen::Index control_dim() const { return controls.cols(); }

  /// CSV with header x0..x{n-1},u0..u{m-1},y0..y{n-1}, one row per
  /// observation, round-trippable decimal text.
  void to_csv(std::ostream& out) const;
  void to_csv_file(const std::string& path) const;
  static SampleSet from_csv(std::istream& in);
  static SampleSet from_csv_file(const std::string& path);
};

/// Cost evaluations at the sample's successor states, values[i] = g(y_i).
struct CostVector {
  Eigen::VectorXd values;
};

class CostSurface;

/// Fitted conditional-embedding estimate. Holds the Cholesky factor of
/// (G + lambda*M*I) and the precomputed weights z solving
/// (G + lambda*M*I) z = g, so each query is a kernel-vector pass and a dot
/// product. Immutable after fit; safe to share across threads.
class EmbeddingEstimate {
 public:
  /// Empirical cost at (x, u): sum_i z_i k(x_i, x) l(u_i, u).
  double cost_at(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const;

  /// Gradient of cost_at with respect to u; component d is
  /// sum_i z_i k(x_i, x) l(u_i, u) * (u_{i,d} - u_d) / sigma_l^2.
  Eigen::VectorXd cost_gradient(const Eigen::VectorXd& x,
                                const Eigen::VectorXd& u) const;

  /// State-conditioned evaluator; precomputes the state kernel vector once so
  /// repeated queries at the same x cost one control-kernel pass each.
  CostSurface cost_surface(const Eigen::VectorXd& x) const;

  /// Same sample, kernels, and factorization with a fresh cost vector; one
  /// triangular solve, no refactorization.
  EmbeddingEstimate with_cost(const CostVector& cost) const;

  /// Solve (G + lambda*M*I) b = v using the stored factor.
  Eigen::VectorXd solve_regularized(const Eigen::VectorXd& v) const;

  const SampleSet& sample() const;
  const KernelParams& state_kernel() const;
  const KernelParams& control_kernel() const;
  double lambda() const;
  const Eigen::VectorXd& weights() const { return z_; }

 private:
  friend EmbeddingEstimate fit(SampleSet sample, const KernelParams&,
                               const KernelParams&, double, const CostVector&);
  friend class CostSurface;
  struct Core;
  EmbeddingEstimate(std::shared_ptr<const Core> core, Eigen::VectorXd z);

  std::shared_ptr<const Core> core_;
  Eigen::VectorXd z_;  // (G + lambda*M*I)^{-1} g
};

/// Fit the empirical embedding from a sample: build the product Gram matrix,
/// factorize G + lambda*M*I, and precompute the cost weights. Deterministic
/// given inputs. Throws std::invalid_argument on non-finite data, length
/// mismatch, or lambda <= 0, and std::runtime_error if the factorization
/// fails.
EmbeddingEstimate fit(SampleSet sample, const KernelParams& state_kernel,
                      const KernelParams& control_kernel, double lambda,
                      const CostVector& cost);

/// Evaluator for one state slice of the empirical cost. Cheap to construct
/// from an estimate; holds scratch buffers, so use one instance per thread.
class CostSurface {
 public:
  double value(const Eigen::VectorXd& u);
  Eigen::VectorXd gradient(const Eigen::VectorXd& u);

 private:
  friend class EmbeddingEstimate;
  CostSurface(std::shared_ptr<const EmbeddingEstimate::Core> core,
              Eigen::VectorXd state_weights);
  void ensure_control_kernel(const Eigen::VectorXd& u);

  std::shared_ptr<const EmbeddingEstimate::Core> core_;
  Eigen::VectorXd v_;    // z .* k_x
  Eigen::VectorXd lu_;   // control kernel vector at cached query
  Eigen::VectorXd acc_;  // squared-distance scratch
  Eigen::VectorXd w_;    // v .* l_u scratch
  Eigen::VectorXd cached_u_;
  bool has_cached_u_ = false;
};

}  // namespace socgrad
