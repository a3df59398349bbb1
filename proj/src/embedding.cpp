#include "socgrad/embedding.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "socgrad/csv.hpp"
#include "socgrad/simd/simd.hpp"

namespace socgrad {

SampleSet::SampleSet(Eigen::MatrixXd xs, Eigen::MatrixXd us, Eigen::MatrixXd ys)
    : states(std::move(xs)), controls(std::move(us)), successors(std::move(ys)) {
  const Eigen::Index m = states.rows();
  if (m < 1) {
    throw std::invalid_argument("SampleSet: needs at least one observation");
  }
  if (controls.rows() != m || successors.rows() != m) {
    throw std::invalid_argument(
        "SampleSet: states, controls, successors must have equal length (" +
        std::to_string(m) + ", " + std::to_string(controls.rows()) + ", " +
        std::to_string(successors.rows()) + ")");
  }
  if (successors.cols() != states.cols()) {
    throw std::invalid_argument(
        "SampleSet: successor dimension differs from state dimension");
  }
  if (states.cols() < 1 || controls.cols() < 1) {
    throw std::invalid_argument("SampleSet: zero-dimensional states or controls");
  }
}

void SampleSet::to_csv(std::ostream& out) const {
  csv::Table table;
  const Eigen::Index n = state_dim();
  const Eigen::Index m = control_dim();
  for (Eigen::Index d = 0; d < n; ++d) table.columns.push_back("x" + std::to_string(d));
  for (Eigen::Index d = 0; d < m; ++d) table.columns.push_back("u" + std::to_string(d));
  for (Eigen::Index d = 0; d < n; ++d) table.columns.push_back("y" + std::to_string(d));
  table.rows.reserve(static_cast<std::size_t>(size()));
  for (Eigen::Index i = 0; i < size(); ++i) {
    std::vector<std::optional<double>> row;
    row.reserve(static_cast<std::size_t>(2 * n + m));
    for (Eigen::Index d = 0; d < n; ++d) row.emplace_back(states(i, d));
    for (Eigen::Index d = 0; d < m; ++d) row.emplace_back(controls(i, d));
    for (Eigen::Index d = 0; d < n; ++d) row.emplace_back(successors(i, d));
    table.rows.push_back(std::move(row));
  }
  table.write(out);
}

void SampleSet::to_csv_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("SampleSet: cannot open '" + path + "' for writing");
  }
  to_csv(out);
}

SampleSet SampleSet::from_csv(std::istream& in) {
  const csv::Table table = csv::Table::read(in);
  Eigen::Index n = 0, m = 0;
  std::size_t idx = 0;
  while (idx < table.columns.size() && table.columns[idx] == "x" + std::to_string(n)) {
    ++n;
    ++idx;
  }
  while (idx < table.columns.size() && table.columns[idx] == "u" + std::to_string(m)) {
    ++m;
    ++idx;
  }
  Eigen::Index ny = 0;
  while (idx < table.columns.size() && table.columns[idx] == "y" + std::to_string(ny)) {
    ++ny;
    ++idx;
  }
  if (n < 1 || m < 1 || ny != n || idx != table.columns.size()) {
    throw std::invalid_argument("SampleSet: header is not x0..,u0..,y0.. with matching dimensions");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(table.rows.size());
  if (rows < 1) {
    throw std::invalid_argument("SampleSet: no observations in CSV");
  }
  Eigen::MatrixXd xs(rows, n), us(rows, m), ys(rows, n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = table.rows[static_cast<std::size_t>(i)];
    for (Eigen::Index d = 0; d < n + m + n; ++d) {
      if (!row[static_cast<std::size_t>(d)].has_value()) {
        throw std::invalid_argument("SampleSet: empty cell at row " + std::to_string(i + 2));
      }
    }
    for (Eigen::Index d = 0; d < n; ++d) xs(i, d) = *row[static_cast<std::size_t>(d)];
    for (Eigen::Index d = 0; d < m; ++d) us(i, d) = *row[static_cast<std::size_t>(n + d)];
    for (Eigen::Index d = 0; d < n; ++d) ys(i, d) = *row[static_cast<std::size_t>(n + m + d)];
  }
  return SampleSet(std::move(xs), std::move(us), std::move(ys));
}

SampleSet SampleSet::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("SampleSet: cannot open '" + path + "'");
  }
  return from_csv(in);
}

struct EmbeddingEstimate::Core {
  SampleSet sample;
  KernelParams state_kernel;
  KernelParams control_kernel;
  double lambda;
  Eigen::LLT<Eigen::MatrixXd> factor;

  Core(SampleSet s, const KernelParams& kx, const KernelParams& ku, double lam)
      : sample(std::move(s)), state_kernel(kx), control_kernel(ku), lambda(lam) {}
};

EmbeddingEstimate::EmbeddingEstimate(std::shared_ptr<const Core> core,
                                     Eigen::VectorXd z)
    : core_(std::move(core)), z_(std::move(z)) {}

EmbeddingEstimate fit(SampleSet sample, const KernelParams& state_kernel,
                      const KernelParams& control_kernel, double lambda,
                      const CostVector& cost) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("fit: regularization lambda must be positive, got " +
                                std::to_string(lambda));
  }
  if (!sample.states.allFinite() || !sample.controls.allFinite() ||
      !sample.successors.allFinite()) {
    throw std::invalid_argument("fit: sample contains non-finite entries");
  }
  if (cost.values.size() != sample.size()) {
    throw std::invalid_argument("fit: cost vector length " +
                                std::to_string(cost.values.size()) +
                                " does not match sample size " +
                                std::to_string(sample.size()));
  }
  if (!cost.values.allFinite()) {
    throw std::invalid_argument("fit: cost vector contains non-finite entries");
  }

  const Eigen::Index m = sample.size();
  auto core = std::make_shared<EmbeddingEstimate::Core>(std::move(sample),
                                                        state_kernel,
                                                        control_kernel, lambda);
  Eigen::MatrixXd reg = gram_product(core->sample.states, core->sample.controls,
                                     state_kernel, control_kernel)
                            .entries;
  reg.diagonal().array() += lambda * static_cast<double>(m);
  core->factor.compute(reg);
  if (core->factor.info() != Eigen::Success) {
    throw std::runtime_error(
        "fit: Cholesky factorization of (G + lambda*M*I) failed; lambda = " +
        std::to_string(lambda));
  }
  Eigen::VectorXd z = core->factor.solve(cost.values);
  return EmbeddingEstimate(std::move(core), std::move(z));
}

EmbeddingEstimate EmbeddingEstimate::with_cost(const CostVector& cost) const {
  if (cost.values.size() != core_->sample.size()) {
    throw std::invalid_argument("with_cost: cost vector length mismatch");
  }
  if (!cost.values.allFinite()) {
    throw std::invalid_argument("with_cost: cost vector contains non-finite entries");
  }
  return EmbeddingEstimate(core_, core_->factor.solve(cost.values));
}

Eigen::VectorXd EmbeddingEstimate::solve_regularized(const Eigen::VectorXd& v) const {
  return core_->factor.solve(v);
}

const SampleSet& EmbeddingEstimate::sample() const { return core_->sample; }
const KernelParams& EmbeddingEstimate::state_kernel() const {
  return core_->state_kernel;
}
const KernelParams& EmbeddingEstimate::control_kernel() const {
  return core_->control_kernel;
}
double EmbeddingEstimate::lambda() const { return core_->lambda; }

CostSurface EmbeddingEstimate::cost_surface(const Eigen::VectorXd& x) const {
  if (x.size() != core_->sample.state_dim()) {
    throw std::invalid_argument("cost_surface: state dimension " +
                                std::to_string(x.size()) + " does not match sample (" +
                                std::to_string(core_->sample.state_dim()) + ")");
  }
  const Eigen::VectorXd kx = kernel_vector(x, core_->sample.states,
                                           core_->state_kernel);
  Eigen::VectorXd v(core_->sample.size());
  simd::ops().mul2(z_.data(), kx.data(), v.data(),
                   static_cast<std::size_t>(v.size()));
  return CostSurface(core_, std::move(v));
}

double EmbeddingEstimate::cost_at(const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& u) const {
  return cost_surface(x).value(u);
}

Eigen::VectorXd EmbeddingEstimate::cost_gradient(const Eigen::VectorXd& x,
                                                 const Eigen::VectorXd& u) const {
  return cost_surface(x).gradient(u);
}

CostSurface::CostSurface(std::shared_ptr<const EmbeddingEstimate::Core> core,
                         Eigen::VectorXd state_weights)
    : core_(std::move(core)), v_(std::move(state_weights)) {
  const Eigen::Index m = v_.size();
  lu_.resize(m);
  acc_.resize(m);
  w_.resize(m);
}

void CostSurface::ensure_control_kernel(const Eigen::VectorXd& u) {
  if (u.size() != core_->sample.control_dim()) {
    throw std::invalid_argument("cost query: control dimension " +
                                std::to_string(u.size()) + " does not match sample (" +
                                std::to_string(core_->sample.control_dim()) + ")");
  }
  if (has_cached_u_ && cached_u_.size() == u.size() &&
      (cached_u_.array() == u.array()).all()) {
    return;
  }
  const auto& ops = simd::ops();
  const Eigen::MatrixXd& us = core_->sample.controls;
  const std::size_t len = static_cast<std::size_t>(v_.size());
  acc_.setZero();
  for (Eigen::Index d = 0; d < u.size(); ++d) {
    ops.sq_accum(us.col(d).data(), u[d], 1.0, acc_.data(), len);
  }
  ops.exp_neg(acc_.data(), core_->control_kernel.inv_two_sigma_sq(), lu_.data(), len);
  cached_u_ = u;
  has_cached_u_ = true;
}

double CostSurface::value(const Eigen::VectorXd& u) {
  ensure_control_kernel(u);
  return simd::ops().dot(v_.data(), lu_.data(), static_cast<std::size_t>(v_.size()));
}

Eigen::VectorXd CostSurface::gradient(const Eigen::VectorXd& u) {
  ensure_control_kernel(u);
  const auto& ops = simd::ops();
  const std::size_t len = static_cast<std::size_t>(v_.size());
  ops.mul2(v_.data(), lu_.data(), w_.data(), len);
  const double total = ops.sum(w_.data(), len);
  const double inv_sigma_sq = core_->control_kernel.inv_sigma_sq();
  const Eigen::MatrixXd& us = core_->sample.controls;
  Eigen::VectorXd grad(u.size());
  for (Eigen::Index d = 0; d < u.size(); ++d) {
    const double moment = ops.dot(w_.data(), us.col(d).data(), len);
    grad[d] = (moment - u[d] * total) * inv_sigma_sq;
  }
  return grad;
}

}  // namespace socgrad
