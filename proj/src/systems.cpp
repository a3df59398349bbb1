#include "socgrad/systems.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "socgrad/csv.hpp"
#include "socgrad/rng.hpp"

namespace socgrad {

namespace {

void require_model_params(const char* name, double ts, double noise) {
  if (!(ts > 0.0) || !std::isfinite(ts)) {
    throw std::invalid_argument(std::string(name) +
                                ": sampling_time must be positive and finite");
  }
  if (noise < 0.0 || !std::isfinite(noise)) {
    throw std::invalid_argument(std::string(name) +
                                ": noise_std must be non-negative and finite");
  }
}

void require_dim(const char* what, const Eigen::VectorXd& v, Eigen::Index dim) {
  if (v.size() != dim) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(dim) + ", got " +
                                std::to_string(v.size()));
  }
}

}  // namespace

IntegratorModel::IntegratorModel(double ts, double noise, Box control_box)
    : sampling_time(ts), noise_std(noise), box(std::move(control_box)) {
  require_model_params("IntegratorModel", ts, noise);
  if (box.dim() != 1) {
    throw std::invalid_argument("IntegratorModel: control box must be scalar");
  }
}

UnicycleModel::UnicycleModel(double ts, double noise, Box control_box)
    : sampling_time(ts), noise_std(noise), box(std::move(control_box)) {
  require_model_params("UnicycleModel", ts, noise);
  if (box.dim() != 2) {
    throw std::invalid_argument(
        "UnicycleModel: control box must be 2-dimensional");
  }
}

Eigen::VectorXd step_integrator(const IntegratorModel& model,
                                const Eigen::VectorXd& x,
                                const Eigen::VectorXd& u,
                                const Eigen::VectorXd& noise) {
  require_dim("step_integrator: state", x, 2);
  require_dim("step_integrator: control", u, 1);
  require_dim("step_integrator: noise", noise, 2);
  const double ts = model.sampling_time;
  Eigen::VectorXd next(2);
  next[0] = x[0] + ts * x[1] + 0.5 * ts * ts * u[0] + noise[0];
  next[1] = x[1] + ts * u[0] + noise[1];
  return next;
}

Eigen::VectorXd step_unicycle(const UnicycleModel& model,
                              const Eigen::VectorXd& x,
                              const Eigen::VectorXd& u,
                              const Eigen::VectorXd& noise) {
  require_dim("step_unicycle: state", x, 3);
  require_dim("step_unicycle: control", u, 2);
  require_dim("step_unicycle: noise", noise, 3);
  const double ts = model.sampling_time;
  Eigen::VectorXd next(3);
  next[0] = x[0] + ts * u[0] * std::sin(x[2]) + noise[0];
  next[1] = x[1] + ts * u[0] * std::cos(x[2]) + noise[1];
  next[2] = x[2] + ts * u[1] + noise[2];
  return next;
}

Eigen::VectorXd step_unicycle_hold(const UnicycleModel& model,
                                   const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& noise) {
  require_dim("step_unicycle_hold: state", x, 3);
  require_dim("step_unicycle_hold: control", u, 2);
  require_dim("step_unicycle_hold: noise", noise, 3);
  const double ts = model.sampling_time;
  // Chord form of the arc: the displacement has length ts*u1*sinc(h) with
  // h = ts*u2/2 and points along the mid-step heading x3 + h. Writing it
  // this way avoids the (cos a - cos b)/u2 cancellation near u2 = 0.
  const double h = 0.5 * ts * u[1];
  const double sinc_h = std::abs(h) < 1e-8 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
  const double chord = ts * u[0] * sinc_h;
  const double mid = x[2] + h;
  Eigen::VectorXd next(3);
  next[0] = x[0] + chord * std::sin(mid) + noise[0];
  next[1] = x[1] + chord * std::cos(mid) + noise[1];
  next[2] = x[2] + ts * u[1] + noise[2];
  return next;
}

Plant make_plant(const IntegratorModel& model) {
  return Plant{2, 1, model.box, model.noise_std,
               [model](const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                       const Eigen::VectorXd& w) {
                 return step_integrator(model, x, u, w);
               }};
}

Plant make_plant(const UnicycleModel& model) {
  return Plant{3, 2, model.box, model.noise_std,
               [model](const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                       const Eigen::VectorXd& w) {
                 return step_unicycle_hold(model, x, u, w);
               }};
}

SampleSet draw_sample_set(const Plant& plant, const Box& state_region,
                          const Box& control_box, Eigen::Index count,
                          std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("draw_sample_set: count must be at least 1");
  }
  if (state_region.dim() != plant.state_dim) {
    throw std::invalid_argument("draw_sample_set: state region dimension " +
                                std::to_string(state_region.dim()) +
                                " does not match the plant (" +
                                std::to_string(plant.state_dim) + ")");
  }
  if (control_box.dim() != plant.control_dim) {
    throw std::invalid_argument("draw_sample_set: control box dimension " +
                                std::to_string(control_box.dim()) +
                                " does not match the plant (" +
                                std::to_string(plant.control_dim) + ")");
  }
  const Eigen::Index n = plant.state_dim;
  const Eigen::Index m = plant.control_dim;
  SplitMix64 rng(seed);
  Eigen::MatrixXd xs(count, n), us(count, m), ys(count, n);
  Eigen::VectorXd x(n), u(m);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index d = 0; d < n; ++d) {
      x[d] = rng.uniform(state_region.lower[d], state_region.upper[d]);
    }
    for (Eigen::Index d = 0; d < m; ++d) {
      u[d] = rng.uniform(control_box.lower[d], control_box.upper[d]);
    }
    const Eigen::VectorXd w = normal_vector(rng, n, plant.noise_std);
    xs.row(i) = x.transpose();
    us.row(i) = u.transpose();
    ys.row(i) = plant.step(x, u, w).transpose();
  }
  return SampleSet(std::move(xs), std::move(us), std::move(ys));
}

double regulation_cost(const Eigen::VectorXd& x) { return x.norm(); }

double tracking_cost(const Eigen::VectorXd& x, const Eigen::Vector2d& target) {
  if (x.size() < 2) {
    throw std::invalid_argument("tracking_cost: state needs a 2-D position");
  }
  return (x.head<2>() - target).squaredNorm();
}

double oracle_integrator_control(const Eigen::VectorXd& x, double sampling_time,
                                 const Box& box) {
  require_dim("oracle_integrator_control: state", x, 2);
  if (box.dim() != 1) {
    throw std::invalid_argument(
        "oracle_integrator_control: control box must be scalar");
  }
  const double ts = sampling_time;
  const double b0 = 0.5 * ts * ts;
  const double b1 = ts;
  const double numer = b0 * (x[0] + ts * x[1]) + b1 * x[1];
  const double denom = b0 * b0 + b1 * b1;
  const double u = -numer / denom;
  return std::min(std::max(u, box.lower[0]), box.upper[0]);
}

TargetTrajectory TargetTrajectory::from_csv(std::istream& in) {
  const csv::Table table = csv::Table::read(in);
  if (table.columns != std::vector<std::string>{"t", "px", "py"}) {
    throw std::invalid_argument("target trajectory: header must be t,px,py");
  }
  if (table.rows.empty()) {
    throw std::invalid_argument("target trajectory: no waypoints");
  }
  TargetTrajectory traj;
  traj.waypoints.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string line = std::to_string(i + 2);
    for (const auto& cell : row) {
      if (!cell.has_value()) {
        throw std::invalid_argument("target trajectory: line " + line +
                                    ": empty field");
      }
    }
    if (*row[0] != static_cast<double>(i)) {
      throw std::invalid_argument("target trajectory: line " + line +
                                  ": time index " + csv::format_double(*row[0]) +
                                  ", expected " + std::to_string(i));
    }
    traj.waypoints.emplace_back(*row[1], *row[2]);
  }
  return traj;
}

TargetTrajectory TargetTrajectory::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("target trajectory: cannot open '" + path + "'");
  }
  try {
    return from_csv(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

TargetTrajectory TargetTrajectory::default_arc() {
  const double cx = -1.0;
  const double cy = 0.95;
  const double radius = 1.15;
  TargetTrajectory traj;
  traj.waypoints.reserve(21);
  for (int t = 0; t <= 20; ++t) {
    const double a = 0.5 * std::numbers::pi * static_cast<double>(t) / 20.0;
    traj.waypoints.emplace_back(cx + radius * std::sin(a),
                                cy - radius * std::cos(a));
  }
  return traj;
}

void Trajectory::to_csv(std::ostream& out) const {
  if (states.empty() || states.size() != controls.size() + 1 ||
      stage_costs.size() != states.size()) {
    throw std::invalid_argument("trajectory csv: inconsistent lengths");
  }
  const Eigen::Index n = states[0].size();
  const Eigen::Index m = controls.empty() ? 0 : controls[0].size();
  csv::Table table;
  table.columns.push_back("t");
  for (Eigen::Index d = 0; d < n; ++d) {
    table.columns.push_back("x" + std::to_string(d));
  }
  for (Eigen::Index d = 0; d < m; ++d) {
    table.columns.push_back("u" + std::to_string(d));
  }
  table.columns.push_back("stage_cost");
  table.rows.reserve(states.size());
  for (std::size_t t = 0; t < states.size(); ++t) {
    std::vector<std::optional<double>> row;
    row.reserve(static_cast<std::size_t>(n + m) + 2);
    row.emplace_back(static_cast<double>(t));
    for (Eigen::Index d = 0; d < n; ++d) {
      row.emplace_back(states[t][d]);
    }
    for (Eigen::Index d = 0; d < m; ++d) {
      if (t < controls.size()) {
        row.emplace_back(controls[t][d]);
      } else {
        row.emplace_back(std::nullopt);
      }
    }
    row.emplace_back(stage_costs[t]);
    table.rows.push_back(std::move(row));
  }
  table.write(out);
}

void Trajectory::to_csv_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("trajectory csv: cannot open '" + path +
                             "' for writing");
  }
  to_csv(out);
}

Trajectory simulate_closed_loop(
    const Plant& plant,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd& x, Eigen::Index t)>&
        controller,
    const std::function<double(const Eigen::VectorXd& x, Eigen::Index t)>&
        stage_cost,
    const Eigen::VectorXd& x0, Eigen::Index horizon, std::uint64_t seed) {
  if (horizon < 1) {
    throw std::invalid_argument("closed loop: horizon must be at least 1");
  }
  require_dim("closed loop: initial state", x0, plant.state_dim);
  if (!x0.allFinite()) {
    throw std::invalid_argument("closed loop: initial state is non-finite");
  }
  SplitMix64 rng(seed);
  Trajectory traj;
  traj.states.reserve(static_cast<std::size_t>(horizon) + 1);
  traj.controls.reserve(static_cast<std::size_t>(horizon));
  traj.stage_costs.reserve(static_cast<std::size_t>(horizon) + 1);
  Eigen::VectorXd x = x0;
  traj.states.push_back(x);
  for (Eigen::Index t = 0; t < horizon; ++t) {
    traj.stage_costs.push_back(stage_cost(x, t));
    Eigen::VectorXd u = controller(x, t);
    if (!plant.control_box.contains(u)) {
      throw std::invalid_argument("closed loop: controller output at step " +
                                  std::to_string(t) +
                                  " lies outside the control box");
    }
    const Eigen::VectorXd w = normal_vector(rng, plant.state_dim, plant.noise_std);
    x = plant.step(x, u, w);
    traj.controls.push_back(std::move(u));
    traj.states.push_back(x);
  }
  traj.stage_costs.push_back(stage_cost(x, horizon));
  double total = 0.0;
  for (const double c : traj.stage_costs) {
    total += c;
  }
  traj.total_cost = total;
  return traj;
}

}  // namespace socgrad
