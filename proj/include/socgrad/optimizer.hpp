#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "socgrad/box.hpp"
#include "socgrad/embedding.hpp"

namespace socgrad {

/// Finite set of candidate controls for the LP initializer. Rows are
/// actions; every action is expected to lie inside the control box (solve
/// checks this before descending).
struct AdmissibleSet {
  Eigen::MatrixXd actions;  // P x m

  explicit AdmissibleSet(Eigen::MatrixXd acts);

  Eigen::Index size() const { return actions.rows(); }
  Eigen::Index dim() const { return actions.cols(); }

  /// Uniformly spaced grid over the box, counts[d] points per dimension with
  /// both endpoints included (a count of 1 places the box center). Actions
  /// are enumerated with the last dimension varying fastest.
  static AdmissibleSet uniform_grid(const Box& box,
                                    const std::vector<Eigen::Index>& counts);

  /// Throws std::invalid_argument naming the first offending action if any
  /// action lies outside the box.
  void require_inside(const Box& box) const;
};

/// Fixed-step projected gradient descent parameters.
struct DescentConfig {
  double step_size;   // eta > 0
  int max_iters;      // >= 1, cap on projected steps
  double grad_tol;    // >= 0, stop when the gradient norm drops to this
  Box box;            // feasible control set, iterates are clamped to it
};

enum class Termination { MaxIters, GradTol };

/// Full iterate history of one descent run. Every iterate has its cost and
/// gradient norm recorded, so iterates, costs, and grad_norms share length.
struct DescentTrace {
  std::vector<Eigen::VectorXd> iterates;
  std::vector<double> costs;
  std::vector<double> grad_norms;
  std::size_t best_index = 0;
  Termination termination = Termination::MaxIters;
};

struct DescentResult {
  Eigen::VectorXd control;  // iterates[best_index]
  DescentTrace trace;
};

/// Componentwise clamp onto the box. Identity on interior points,
/// idempotent.
Eigen::VectorXd project_box(const Eigen::VectorXd& u, const Box& box);

/// Index of the admissible action minimizing the surface's cost; ties go to
/// the lowest index. The LP over the probability simplex collapses to this
/// argmin through its Lagrangian dual.
Eigen::Index lp_initialize_index(CostSurface& surface, const AdmissibleSet& set);

/// The minimal-cost admissible action itself.
Eigen::VectorXd lp_initialize(const EmbeddingEstimate& est,
                              const Eigen::VectorXd& x,
                              const AdmissibleSet& set);

/// Projected gradient descent from u0 on the empirical cost surface at x.
/// Steps u <- clamp(u - eta * grad) until the gradient norm reaches grad_tol
/// or max_iters steps are taken; returns the best-cost iterate encountered,
/// so the result never costs more than u0. Throws std::invalid_argument if
/// u0 is outside the box (callers project first) and std::runtime_error on a
/// non-finite gradient, naming the iteration.
DescentResult descend(const EmbeddingEstimate& est, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& u0, const DescentConfig& config);

/// LP initialization followed by descent, sharing one cost surface so the
/// recorded costs are directly comparable: costs[0] is the admissible-set
/// minimum and the returned cost never exceeds it.
DescentResult solve(const EmbeddingEstimate& est, const Eigen::VectorXd& x,
                    const AdmissibleSet& set, const DescentConfig& config);

/// Trace export: columns iter,u0..u{m-1},cost,grad_norm, one row per
/// iterate.
void write_trace_csv(const DescentTrace& trace, std::ostream& out);
void write_trace_csv_file(const DescentTrace& trace, const std::string& path);

}  // namespace socgrad
