#include "socgrad/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "socgrad/simd/simd.hpp"

namespace socgrad {
namespace {

void require_same_dim(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                      const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  if (a.size() < 1) {
    throw std::invalid_argument(std::string(where) + ": empty point");
  }
}

}  // namespace

KernelParams::KernelParams(double bandwidth) : bandwidth_(bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("KernelParams: bandwidth must be positive, got " +
                                std::to_string(bandwidth));
  }
  inv_sigma_sq_ = 1.0 / (bandwidth * bandwidth);
  inv_two_sigma_sq_ = 0.5 * inv_sigma_sq_;
}

double eval_kernel(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const KernelParams& params) {
  require_same_dim(a, b, "eval_kernel");
  const auto& ops = simd::ops();
  double acc = 0.0;
  for (Eigen::Index d = 0; d < a.size(); ++d) {
    ops.sq_accum(a.data() + d, b[d], 1.0, &acc, 1);
  }
  double out = 0.0;
  ops.exp_neg(&acc, params.inv_two_sigma_sq(), &out, 1);
  return out;
}

Eigen::VectorXd eval_kernel_partial(const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b,
                                    const KernelParams& params) {
  require_same_dim(a, b, "eval_kernel_partial");
  const double k = eval_kernel(a, b, params);
  return (-params.inv_sigma_sq() * k) * (a - b);
}

Eigen::VectorXd kernel_vector(const Eigen::VectorXd& query,
                              const Eigen::MatrixXd& anchors,
                              const KernelParams& params) {
  const Eigen::Index m = anchors.rows();
  if (m < 1) {
    throw std::invalid_argument("kernel_vector: empty anchor list");
  }
  if (anchors.cols() != query.size() || query.size() < 1) {
    throw std::invalid_argument(
        "kernel_vector: anchor dimension " + std::to_string(anchors.cols()) +
        " does not match query dimension " + std::to_string(query.size()));
  }
  const auto& ops = simd::ops();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(m);
  for (Eigen::Index d = 0; d < query.size(); ++d) {
    ops.sq_accum(anchors.col(d).data(), query[d], 1.0, acc.data(),
                 static_cast<std::size_t>(m));
  }
  Eigen::VectorXd out(m);
  ops.exp_neg(acc.data(), params.inv_two_sigma_sq(), out.data(),
              static_cast<std::size_t>(m));
  return out;
}

GramMatrix gram_product(const Eigen::MatrixXd& xs, const Eigen::MatrixXd& us,
                        const KernelParams& state_kernel,
                        const KernelParams& control_kernel) {
  const Eigen::Index m = xs.rows();
  if (us.rows() != m) {
    throw std::invalid_argument("gram_product: state and control lists differ in length (" +
                                std::to_string(m) + " vs " +
                                std::to_string(us.rows()) + ")");
  }
  if (m < 1) {
    throw std::invalid_argument("gram_product: empty sample");
  }
  const double cx = state_kernel.inv_two_sigma_sq();
  const double cu = control_kernel.inv_two_sigma_sq();
  const auto& ops = simd::ops();

  GramMatrix gram;
  gram.entries.resize(m, m);
  Eigen::VectorXd acc(m);
  Eigen::VectorXd row(m);
  // Upper triangle row by row, mirrored; the scaled squared distances of the
  // two spaces share one accumulator so a single exp pass finishes the row.
  for (Eigen::Index i = 0; i < m; ++i) {
    const std::size_t len = static_cast<std::size_t>(m - i);
    acc.head(m - i).setZero();
    for (Eigen::Index d = 0; d < xs.cols(); ++d) {
      ops.sq_accum(xs.col(d).data() + i, xs(i, d), cx, acc.data(), len);
    }
    for (Eigen::Index d = 0; d < us.cols(); ++d) {
      ops.sq_accum(us.col(d).data() + i, us(i, d), cu, acc.data(), len);
    }
    ops.exp_neg(acc.data(), 1.0, row.data(), len);
    gram.entries(i, i) = 1.0;
    for (Eigen::Index j = 1; j < m - i; ++j) {
      gram.entries(i, i + j) = row[j];
      gram.entries(i + j, i) = row[j];
    }
  }
  return gram;
}

}  // namespace socgrad
