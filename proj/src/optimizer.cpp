#include "socgrad/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "socgrad/csv.hpp"

namespace socgrad {

AdmissibleSet::AdmissibleSet(Eigen::MatrixXd acts) : actions(std::move(acts)) {
  if (actions.rows() < 1 || actions.cols() < 1) {
    throw std::invalid_argument("AdmissibleSet: needs at least one action");
  }
  if (!actions.allFinite()) {
    throw std::invalid_argument("AdmissibleSet: actions contain non-finite entries");
  }
}

AdmissibleSet AdmissibleSet::uniform_grid(const Box& box,
                                          const std::vector<Eigen::Index>& counts) {
  const Eigen::Index dim = box.dim();
  if (static_cast<Eigen::Index>(counts.size()) != dim) {
    throw std::invalid_argument("uniform_grid: " + std::to_string(counts.size()) +
                                " counts for a " + std::to_string(dim) +
                                "-dimensional box");
  }
  Eigen::Index total = 1;
  for (Eigen::Index d = 0; d < dim; ++d) {
    if (counts[static_cast<std::size_t>(d)] < 1) {
      throw std::invalid_argument("uniform_grid: counts[" + std::to_string(d) +
                                  "] must be at least 1");
    }
    total *= counts[static_cast<std::size_t>(d)];
  }
  std::vector<Eigen::VectorXd> axes;
  axes.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index d = 0; d < dim; ++d) {
    const Eigen::Index c = counts[static_cast<std::size_t>(d)];
    if (c == 1) {
      axes.push_back(Eigen::VectorXd::Constant(1, 0.5 * (box.lower[d] + box.upper[d])));
    } else {
      axes.push_back(Eigen::VectorXd::LinSpaced(c, box.lower[d], box.upper[d]));
    }
  }
  Eigen::MatrixXd actions(total, dim);
  for (Eigen::Index i = 0; i < total; ++i) {
    Eigen::Index rem = i;
    for (Eigen::Index d = dim - 1; d >= 0; --d) {
      const Eigen::Index c = counts[static_cast<std::size_t>(d)];
      actions(i, d) = axes[static_cast<std::size_t>(d)][rem % c];
      rem /= c;
    }
  }
  return AdmissibleSet(std::move(actions));
}

void AdmissibleSet::require_inside(const Box& box) const {
  if (box.dim() != dim()) {
    throw std::invalid_argument("AdmissibleSet: action dimension " +
                                std::to_string(dim()) + " does not match box (" +
                                std::to_string(box.dim()) + ")");
  }
  for (Eigen::Index j = 0; j < size(); ++j) {
    if (!box.contains(actions.row(j).transpose())) {
      throw std::invalid_argument("AdmissibleSet: action " + std::to_string(j) +
                                  " lies outside the control box");
    }
  }
}

Eigen::VectorXd project_box(const Eigen::VectorXd& u, const Box& box) {
  if (u.size() != box.dim()) {
    throw std::invalid_argument("project_box: control dimension " +
                                std::to_string(u.size()) + " does not match box (" +
                                std::to_string(box.dim()) + ")");
  }
  return box.clamp(u);
}

Eigen::Index lp_initialize_index(CostSurface& surface, const AdmissibleSet& set) {
  Eigen::Index best = 0;
  double best_cost = surface.value(set.actions.row(0).transpose());
  for (Eigen::Index j = 1; j < set.size(); ++j) {
    const double c = surface.value(set.actions.row(j).transpose());
    if (c < best_cost) {
      best = j;
      best_cost = c;
    }
  }
  return best;
}

Eigen::VectorXd lp_initialize(const EmbeddingEstimate& est,
                              const Eigen::VectorXd& x,
                              const AdmissibleSet& set) {
  CostSurface surface = est.cost_surface(x);
  return set.actions.row(lp_initialize_index(surface, set)).transpose();
}

namespace {

void require_valid(const DescentConfig& config) {
  if (!(config.step_size > 0.0) || !std::isfinite(config.step_size)) {
    throw std::invalid_argument("descent config: step_size must be positive and finite");
  }
  if (config.max_iters < 1) {
    throw std::invalid_argument("descent config: max_iters must be at least 1");
  }
  if (std::isnan(config.grad_tol) || config.grad_tol < 0.0) {
    throw std::invalid_argument("descent config: grad_tol must be non-negative");
  }
}

/// Core loop. Records cost and gradient norm for every iterate, including
/// the one it stops at, so the three trace sequences stay aligned.
DescentResult descend_on(CostSurface& surface, const Eigen::VectorXd& u0,
                         const DescentConfig& config) {
  DescentTrace trace;
  Eigen::VectorXd u = u0;
  trace.iterates.push_back(u);
  trace.costs.push_back(surface.value(u));
  for (int n = 0;; ++n) {
    const Eigen::VectorXd grad = surface.gradient(u);
    if (!grad.allFinite()) {
      throw std::runtime_error("descend: non-finite gradient at iteration " +
                               std::to_string(n));
    }
    const double norm = grad.norm();
    trace.grad_norms.push_back(norm);
    if (norm <= config.grad_tol) {
      trace.termination = Termination::GradTol;
      break;
    }
    if (n == config.max_iters) {
      trace.termination = Termination::MaxIters;
      break;
    }
    u = project_box(u - config.step_size * grad, config.box);
    trace.iterates.push_back(u);
    trace.costs.push_back(surface.value(u));
  }
  trace.best_index = static_cast<std::size_t>(
      std::min_element(trace.costs.begin(), trace.costs.end()) -
      trace.costs.begin());
  Eigen::VectorXd best = trace.iterates[trace.best_index];
  return DescentResult{std::move(best), std::move(trace)};
}

}  // namespace

DescentResult descend(const EmbeddingEstimate& est, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& u0, const DescentConfig& config) {
  require_valid(config);
  if (!config.box.contains(u0)) {
    throw std::invalid_argument("descend: u0 lies outside the control box");
  }
  CostSurface surface = est.cost_surface(x);
  return descend_on(surface, u0, config);
}

DescentResult solve(const EmbeddingEstimate& est, const Eigen::VectorXd& x,
                    const AdmissibleSet& set, const DescentConfig& config) {
  require_valid(config);
  set.require_inside(config.box);
  CostSurface surface = est.cost_surface(x);
  const Eigen::Index j = lp_initialize_index(surface, set);
  return descend_on(surface, set.actions.row(j).transpose(), config);
}

void write_trace_csv(const DescentTrace& trace, std::ostream& out) {
  const std::size_t len = trace.iterates.size();
  if (len == 0 || trace.costs.size() != len || trace.grad_norms.size() != len) {
    throw std::invalid_argument("trace csv: empty or misaligned trace");
  }
  const Eigen::Index m = trace.iterates[0].size();
  csv::Table table;
  table.columns.push_back("iter");
  for (Eigen::Index d = 0; d < m; ++d) {
    table.columns.push_back("u" + std::to_string(d));
  }
  table.columns.push_back("cost");
  table.columns.push_back("grad_norm");
  table.rows.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::optional<double>> row;
    row.reserve(static_cast<std::size_t>(m) + 3);
    row.emplace_back(static_cast<double>(i));
    for (Eigen::Index d = 0; d < m; ++d) {
      row.emplace_back(trace.iterates[i][d]);
    }
    row.emplace_back(trace.costs[i]);
    row.emplace_back(trace.grad_norms[i]);
    table.rows.push_back(std::move(row));
  }
  table.write(out);
}

void write_trace_csv_file(const DescentTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("trace csv: cannot open '" + path + "' for writing");
  }
  write_trace_csv(trace, out);
}

}  // namespace socgrad
