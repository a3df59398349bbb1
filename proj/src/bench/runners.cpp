#include "socgrad/bench/runners.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socgrad/bench/pool.hpp"
#include "socgrad/csv.hpp"
#include "socgrad/embedding.hpp"
#include "socgrad/optimizer.hpp"
#include "socgrad/rng.hpp"
#include "socgrad/svg.hpp"
#include "socgrad/systems.hpp"

namespace socgrad::bench {

namespace {

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

// Sub-stream salts: the sample and the rollout disturbances come from
// separate streams of the experiment seed, so changing the horizon never
// perturbs the sample and vice versa.
constexpr std::uint64_t kSampleSalt = 0x5A;
constexpr std::uint64_t kSimSalt = 0xB0;

constexpr const char* kBlue = "#3465a4";
constexpr const char* kOrange = "#e8731a";
constexpr const char* kGray = "#7f7f7f";
constexpr const char* kRed = "#c0392b";

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double v) { return csv::format_double(v); }

std::string human(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

Box integrator_control_box() { return Box::interval(-1.0, 1.0); }

Box integrator_state_region() {
  Eigen::VectorXd lo(2), hi(2);
  lo << -1.0, -1.0;
  hi << 1.0, 1.0;
  return Box(std::move(lo), std::move(hi));
}

Box vehicle_control_box() {
  Eigen::VectorXd lo(2), hi(2);
  lo << 0.5, -10.1;
  hi << 1.2, 10.1;
  return Box(std::move(lo), std::move(hi));
}

Box vehicle_state_region() {
  const double pi = std::numbers::pi;
  Eigen::VectorXd lo(3), hi(3);
  lo << -1.2, -1.2, -pi;
  hi << 1.2, 1.2, pi;
  return Box(std::move(lo), std::move(hi));
}

CostVector regulation_costs(const SampleSet& sample) {
  Eigen::VectorXd g(sample.size());
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    g[i] = regulation_cost(sample.successors.row(i).transpose());
  }
  return CostVector{std::move(g)};
}

void write_summary(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("summary: cannot open '" + path + "' for writing");
  }
  for (const auto& [key, value] : entries) {
    out << key << '=' << value << '\n';
  }
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct PointRow {
  double x0, x1, u_grad, u_oracle, abs_err, j_init, j_final;
};

/// Solve at every grid point and compare against the closed-form oracle.
/// The pool is only engaged at the top level; sweep cells run their grids
/// sequentially because the cells themselves are the parallel unit.
std::vector<PointRow> solve_integrator_grid(const EmbeddingEstimate& est,
                                            const Eigen::MatrixXd& points,
                                            const AdmissibleSet& actions,
                                            const DescentConfig& dcfg,
                                            double sampling_time,
                                            bool use_pool) {
  std::vector<PointRow> rows(static_cast<std::size_t>(points.rows()));
  auto task = [&](std::size_t i) {
    const Eigen::VectorXd x = points.row(static_cast<Eigen::Index>(i)).transpose();
    const DescentResult res = solve(est, x, actions, dcfg);
    const double u_grad = res.control[0];
    const double u_oracle = oracle_integrator_control(x, sampling_time, dcfg.box);
    rows[i] = PointRow{x[0],
                       x[1],
                       u_grad,
                       u_oracle,
                       std::abs(u_grad - u_oracle),
                       res.trace.costs.front(),
                       res.trace.costs[res.trace.best_index]};
  };
  if (use_pool) {
    parallel_for(rows.size(), task);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      task(i);
    }
  }
  return rows;
}

std::vector<Eigen::Vector2d> positions(const Trajectory& traj) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(traj.states.size());
  for (const auto& x : traj.states) {
    pts.emplace_back(x[0], x[1]);
  }
  return pts;
}

struct Range2d {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  bool empty = true;

  void include(const Eigen::Vector2d& p) {
    if (empty) {
      x_min = x_max = p.x();
      y_min = y_max = p.y();
      empty = false;
      return;
    }
    x_min = std::min(x_min, p.x());
    x_max = std::max(x_max, p.x());
    y_min = std::min(y_min, p.y());
    y_max = std::max(y_max, p.y());
  }

  void pad(double fraction, double at_least) {
    const double dx = std::max(fraction * (x_max - x_min), at_least);
    const double dy = std::max(fraction * (y_max - y_min), at_least);
    x_min -= dx;
    x_max += dx;
    y_min -= dy;
    y_max += dy;
  }
};

}  // namespace

IntegratorReport run_integrator(const ExperimentConfig& cfg, std::ostream& log) {
  const auto t0 = clock_type::now();
  if (cfg.experiment != Experiment::Integrator) {
    throw std::invalid_argument("run_integrator: config is for experiment '" +
                                experiment_name(cfg.experiment) + "'");
  }
  cfg.validate();

  const IntegratorModel model(cfg.sampling_time, cfg.noise_std,
                              integrator_control_box());
  const Plant plant = make_plant(model);
  const Box region = integrator_state_region();
  const SampleSet sample = draw_sample_set(plant, region, model.box,
                                           cfg.sample_size,
                                           derive_seed(cfg.seed, kSampleSalt));
  const KernelParams state_kernel(cfg.state_sigma);
  const KernelParams control_kernel(cfg.control_sigma);
  const EmbeddingEstimate est =
      fit(sample, state_kernel, control_kernel, cfg.lambda_for(cfg.sample_size),
          regulation_costs(sample));
  const AdmissibleSet actions =
      AdmissibleSet::uniform_grid(model.box, cfg.admissible_counts);
  const Eigen::MatrixXd points =
      AdmissibleSet::uniform_grid(region, cfg.eval_grid).actions;
  const DescentConfig dcfg{cfg.step_size, cfg.max_iters, cfg.grad_tol, model.box};
  log << "integrator: M=" << cfg.sample_size << ", " << points.rows()
      << " evaluation points, seed " << cfg.seed << "\n";

  const std::vector<PointRow> rows =
      solve_integrator_grid(est, points, actions, dcfg, cfg.sampling_time, true);
  double err_sum = 0.0;
  double err_max = 0.0;
  for (const auto& r : rows) {
    err_sum += r.abs_err;
    err_max = std::max(err_max, r.abs_err);
  }

  fs::create_directories(cfg.out_dir);
  IntegratorReport report;
  report.mean_abs_err = err_sum / static_cast<double>(rows.size());
  report.max_abs_err = err_max;
  report.controls_csv = (fs::path(cfg.out_dir) / "controls.csv").string();
  report.vector_field_svg = (fs::path(cfg.out_dir) / "vector_field.svg").string();
  report.summary_txt = (fs::path(cfg.out_dir) / "integrator_summary.txt").string();

  csv::Table table;
  table.columns = {"x0", "x1", "u_grad", "u_oracle", "abs_err", "J_init", "J_final"};
  table.rows.reserve(rows.size());
  for (const auto& r : rows) {
    table.rows.push_back({r.x0, r.x1, r.u_grad, r.u_oracle, r.abs_err, r.j_init,
                          r.j_final});
  }
  table.write_file(report.controls_csv);

  // Arrows show the deterministic one-step displacement under each
  // controller; the disturbance is omitted so the two fields are comparable.
  const Eigen::VectorXd zero_noise = Eigen::VectorXd::Zero(2);
  std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> oracle_arrows;
  std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> grad_arrows;
  oracle_arrows.reserve(rows.size());
  grad_arrows.reserve(rows.size());
  Range2d range;
  for (const auto& r : rows) {
    Eigen::VectorXd x(2);
    x << r.x0, r.x1;
    Eigen::VectorXd uo(1), ug(1);
    uo << r.u_oracle;
    ug << r.u_grad;
    const Eigen::VectorXd next_o = step_integrator(model, x, uo, zero_noise);
    const Eigen::VectorXd next_g = step_integrator(model, x, ug, zero_noise);
    oracle_arrows.emplace_back(Eigen::Vector2d(r.x0, r.x1),
                               Eigen::Vector2d(next_o[0], next_o[1]));
    grad_arrows.emplace_back(Eigen::Vector2d(r.x0, r.x1),
                             Eigen::Vector2d(next_g[0], next_g[1]));
    range.include(oracle_arrows.back().first);
    range.include(oracle_arrows.back().second);
    range.include(grad_arrows.back().second);
  }
  range.pad(0.08, 0.05);
  svg::Plot plot(640, 640, "Closed-loop vector field");
  plot.set_axes(range.x_min, range.x_max, range.y_min, range.y_max,
                "x0 (position)", "x1 (velocity)");
  for (const auto& [from, to] : oracle_arrows) {
    plot.arrow(from, to, kBlue, 1.4);
  }
  for (const auto& [from, to] : grad_arrows) {
    plot.arrow(from, to, kOrange, 1.4);
  }
  plot.legend({{"oracle", kBlue}, {"gradient", kOrange}});
  plot.write_file(report.vector_field_svg);

  report.elapsed_seconds = seconds_since(t0);
  write_summary(report.summary_txt,
                {{"experiment", "integrator"},
                 {"sample_size", std::to_string(cfg.sample_size)},
                 {"seed", std::to_string(cfg.seed)},
                 {"points", std::to_string(rows.size())},
                 {"mean_abs_err", fmt(report.mean_abs_err)},
                 {"max_abs_err", fmt(report.max_abs_err)},
                 {"elapsed_seconds", fixed3(report.elapsed_seconds)}});
  log << "integrator: mean |u_grad - u_oracle| = " << human(report.mean_abs_err)
      << ", max = " << human(report.max_abs_err) << "\n";
  log << "integrator: wrote " << report.controls_csv << ", "
      << report.vector_field_svg << ", " << report.summary_txt << " ("
      << fixed3(report.elapsed_seconds) << " s)\n";
  return report;
}

SweepReport run_error_sweep(const ExperimentConfig& cfg, std::ostream& log) {
  const auto t0 = clock_type::now();
  if (cfg.experiment != Experiment::ErrorSweep) {
    throw std::invalid_argument("run_error_sweep: config is for experiment '" +
                                experiment_name(cfg.experiment) + "'");
  }
  cfg.validate();

  const IntegratorModel model(cfg.sampling_time, cfg.noise_std,
                              integrator_control_box());
  const Plant plant = make_plant(model);
  const Box region = integrator_state_region();
  const KernelParams state_kernel(cfg.state_sigma);
  const KernelParams control_kernel(cfg.control_sigma);
  const AdmissibleSet actions =
      AdmissibleSet::uniform_grid(model.box, cfg.admissible_counts);
  const Eigen::MatrixXd points =
      AdmissibleSet::uniform_grid(region, cfg.eval_grid).actions;
  const DescentConfig dcfg{cfg.step_size, cfg.max_iters, cfg.grad_tol, model.box};

  std::vector<Eigen::Index> sizes = cfg.sweep_sample_sizes;
  std::sort(sizes.begin(), sizes.end());
  const std::size_t repeats = static_cast<std::size_t>(cfg.sweep_repeats);
  log << "sweep: " << sizes.size() << " sample sizes x " << repeats
      << " repeats, seed " << cfg.seed << "\n";

  struct Cell {
    double mean_err = 0.0;
    double max_err = 0.0;
  };
  std::vector<Cell> cells(sizes.size() * repeats);
  parallel_for(cells.size(), [&](std::size_t i) {
    const std::size_t mi = i / repeats;
    const std::size_t r = i % repeats;
    const Eigen::Index m = sizes[mi];
    const std::uint64_t cell_seed = derive_seed(
        derive_seed(cfg.seed, static_cast<std::uint64_t>(m)),
        static_cast<std::uint64_t>(r));
    const SampleSet sample = draw_sample_set(plant, region, model.box, m,
                                             derive_seed(cell_seed, kSampleSalt));
    const EmbeddingEstimate est =
        fit(sample, state_kernel, control_kernel, cfg.lambda_for(m),
            regulation_costs(sample));
    const std::vector<PointRow> rows = solve_integrator_grid(
        est, points, actions, dcfg, cfg.sampling_time, false);
    double sum = 0.0;
    double mx = 0.0;
    for (const auto& row : rows) {
      sum += row.abs_err;
      mx = std::max(mx, row.abs_err);
    }
    cells[i] = Cell{sum / static_cast<double>(rows.size()), mx};
  });

  fs::create_directories(cfg.out_dir);
  SweepReport report;
  report.sample_sizes = sizes;
  report.sweep_csv = (fs::path(cfg.out_dir) / "sweep.csv").string();
  report.sweep_svg = (fs::path(cfg.out_dir) / "sweep.svg").string();
  report.summary_txt = (fs::path(cfg.out_dir) / "sweep_summary.txt").string();

  csv::Table table;
  table.columns = {"M", "repeat", "mean_err", "max_err"};
  table.rows.reserve(cells.size());
  for (std::size_t mi = 0; mi < sizes.size(); ++mi) {
    for (std::size_t r = 0; r < repeats; ++r) {
      const Cell& cell = cells[mi * repeats + r];
      table.rows.push_back({static_cast<double>(sizes[mi]),
                            static_cast<double>(r), cell.mean_err,
                            cell.max_err});
    }
  }
  table.write_file(report.sweep_csv);

  std::vector<std::pair<std::string, std::string>> summary{
      {"experiment", "error_sweep"},
      {"seed", std::to_string(cfg.seed)},
      {"repeats", std::to_string(repeats)}};
  std::vector<double> mean_avg(sizes.size()), mean_lo(sizes.size()),
      mean_hi(sizes.size());
  std::vector<double> max_avg(sizes.size()), max_lo(sizes.size()),
      max_hi(sizes.size());
  for (std::size_t mi = 0; mi < sizes.size(); ++mi) {
    std::vector<double> means(repeats), maxes(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
      means[r] = cells[mi * repeats + r].mean_err;
      maxes[r] = cells[mi * repeats + r].max_err;
    }
    mean_avg[mi] = std::accumulate(means.begin(), means.end(), 0.0) /
                   static_cast<double>(repeats);
    max_avg[mi] = std::accumulate(maxes.begin(), maxes.end(), 0.0) /
                  static_cast<double>(repeats);
    mean_lo[mi] = *std::min_element(means.begin(), means.end());
    mean_hi[mi] = *std::max_element(means.begin(), means.end());
    max_lo[mi] = *std::min_element(maxes.begin(), maxes.end());
    max_hi[mi] = *std::max_element(maxes.begin(), maxes.end());
    report.median_mean_err.push_back(median(means));
    report.median_max_err.push_back(median(maxes));
    const std::string m_str = std::to_string(sizes[mi]);
    summary.emplace_back("median_mean_err_" + m_str,
                         fmt(report.median_mean_err.back()));
    summary.emplace_back("median_max_err_" + m_str,
                         fmt(report.median_max_err.back()));
    log << "sweep: M=" << m_str << ": median mean err = "
        << human(report.median_mean_err.back()) << ", median max err = "
        << human(report.median_max_err.back()) << "\n";
  }

  svg::Plot plot(640, 420, "Control error vs sample size");
  const double x_lo = static_cast<double>(sizes.front());
  const double x_hi = static_cast<double>(sizes.back());
  const double x_pad = std::max(0.06 * (x_hi - x_lo), 1.0);
  double y_hi = 1e-9;
  for (std::size_t mi = 0; mi < sizes.size(); ++mi) {
    y_hi = std::max(y_hi, std::max(mean_hi[mi], max_hi[mi]));
  }
  plot.set_axes(x_lo - x_pad, x_hi + x_pad, 0.0, 1.12 * y_hi, "sample size M",
                "control error vs oracle");
  std::vector<double> xs(sizes.size());
  for (std::size_t mi = 0; mi < sizes.size(); ++mi) {
    xs[mi] = static_cast<double>(sizes[mi]);
  }
  auto curve = [&](const std::vector<double>& ys) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(ys.size());
    for (std::size_t mi = 0; mi < ys.size(); ++mi) {
      pts.emplace_back(xs[mi], ys[mi]);
    }
    return pts;
  };
  if (sizes.size() >= 2) {
    plot.band(xs, max_lo, max_hi, kRed, 0.15);
    plot.band(xs, mean_lo, mean_hi, kBlue, 0.15);
    plot.polyline(curve(max_avg), kRed, 2.0);
    plot.polyline(curve(mean_avg), kBlue, 2.0);
  }
  plot.markers(curve(max_avg), kRed, 3.0);
  plot.markers(curve(mean_avg), kBlue, 3.0);
  plot.legend({{"mean error", kBlue}, {"max error", kRed}});
  plot.write_file(report.sweep_svg);

  report.elapsed_seconds = seconds_since(t0);
  summary.emplace_back("elapsed_seconds", fixed3(report.elapsed_seconds));
  write_summary(report.summary_txt, summary);
  log << "sweep: wrote " << report.sweep_csv << ", " << report.sweep_svg << ", "
      << report.summary_txt << " (" << fixed3(report.elapsed_seconds) << " s)\n";
  return report;
}

VehicleReport run_vehicle(const ExperimentConfig& cfg, std::ostream& log) {
  const auto t0 = clock_type::now();
  if (cfg.experiment != Experiment::Vehicle) {
    throw std::invalid_argument("run_vehicle: config is for experiment '" +
                                experiment_name(cfg.experiment) + "'");
  }
  cfg.validate();

  const UnicycleModel model(cfg.sampling_time, cfg.noise_std,
                            vehicle_control_box());
  const Plant plant = make_plant(model);
  const TargetTrajectory target = cfg.target_path.empty()
                                      ? TargetTrajectory::default_arc()
                                      : TargetTrajectory::from_csv_file(cfg.target_path);
  if (cfg.horizon > target.horizon()) {
    throw std::invalid_argument(
        "config: horizon " + std::to_string(cfg.horizon) +
        " exceeds the target trajectory's " + std::to_string(target.horizon()) +
        " steps");
  }
  const Eigen::Index steps = cfg.horizon;

  const SampleSet sample = draw_sample_set(plant, vehicle_state_region(),
                                           model.box, cfg.sample_size,
                                           derive_seed(cfg.seed, kSampleSalt));
  const KernelParams state_kernel(cfg.state_sigma);
  const KernelParams control_kernel(cfg.control_sigma);
  const double lambda = cfg.lambda_for(cfg.sample_size);

  // The controller at step t minimizes the expected distance of the NEXT
  // state to waypoint t+1, so the step-t weights are fitted against that
  // waypoint's cost over the successors.
  auto cost_toward = [&](Eigen::Index waypoint) {
    Eigen::VectorXd g(sample.size());
    for (Eigen::Index i = 0; i < sample.size(); ++i) {
      g[i] = tracking_cost(sample.successors.row(i).transpose(),
                           target.waypoints[static_cast<std::size_t>(waypoint)]);
    }
    return CostVector{std::move(g)};
  };
  std::vector<EmbeddingEstimate> per_step;
  per_step.reserve(static_cast<std::size_t>(steps));
  per_step.push_back(fit(sample, state_kernel, control_kernel, lambda,
                         cost_toward(1)));
  for (Eigen::Index t = 1; t < steps; ++t) {
    per_step.push_back(per_step.front().with_cost(cost_toward(t + 1)));
  }

  const AdmissibleSet actions =
      AdmissibleSet::uniform_grid(model.box, cfg.admissible_counts);
  const DescentConfig dcfg{cfg.step_size, cfg.max_iters, cfg.grad_tol, model.box};
  Eigen::VectorXd x0(3);
  x0 << -1.0, -0.2, 0.5 * std::numbers::pi;
  const std::uint64_t sim_seed = derive_seed(cfg.seed, kSimSalt);
  auto stage = [&](const Eigen::VectorXd& x, Eigen::Index t) {
    return tracking_cost(x, target.waypoints[static_cast<std::size_t>(t)]);
  };
  log << "vehicle: M=" << cfg.sample_size << ", N=" << steps
      << ", |A|=" << actions.size() << ", seed " << cfg.seed << "\n";

  const auto t_lp = clock_type::now();
  const Trajectory lp_traj = simulate_closed_loop(
      plant,
      [&](const Eigen::VectorXd& x, Eigen::Index t) {
        CostSurface surface =
            per_step[static_cast<std::size_t>(t)].cost_surface(x);
        const Eigen::Index j = lp_initialize_index(surface, actions);
        Eigen::VectorXd u = actions.actions.row(j).transpose();
        return u;
      },
      stage, x0, steps, sim_seed);
  const double lp_seconds = seconds_since(t_lp);

  const auto t_grad = clock_type::now();
  const Trajectory grad_traj = simulate_closed_loop(
      plant,
      [&](const Eigen::VectorXd& x, Eigen::Index t) {
        return solve(per_step[static_cast<std::size_t>(t)], x, actions, dcfg)
            .control;
      },
      stage, x0, steps, sim_seed);
  const double grad_seconds = seconds_since(t_grad);

  fs::create_directories(cfg.out_dir);
  VehicleReport report;
  report.total_cost_lp = lp_traj.total_cost;
  report.total_cost_grad = grad_traj.total_cost;
  report.lp_seconds = lp_seconds;
  report.grad_seconds = grad_seconds;
  report.lp_csv = (fs::path(cfg.out_dir) / "trajectory_lp.csv").string();
  report.grad_csv = (fs::path(cfg.out_dir) / "trajectory_grad.csv").string();
  report.tracking_svg = (fs::path(cfg.out_dir) / "tracking.svg").string();
  report.summary_txt = (fs::path(cfg.out_dir) / "vehicle_summary.txt").string();
  lp_traj.to_csv_file(report.lp_csv);
  grad_traj.to_csv_file(report.grad_csv);

  Range2d range;
  for (const auto& w : target.waypoints) {
    range.include(w);
  }
  const std::vector<Eigen::Vector2d> lp_pts = positions(lp_traj);
  const std::vector<Eigen::Vector2d> grad_pts = positions(grad_traj);
  for (const auto& p : lp_pts) {
    range.include(p);
  }
  for (const auto& p : grad_pts) {
    range.include(p);
  }
  range.pad(0.1, 0.05);
  svg::Plot plot(640, 560, "Vehicle target tracking");
  plot.set_axes(range.x_min, range.x_max, range.y_min, range.y_max,
                "x position", "y position");
  plot.polyline(target.waypoints, kBlue, 2.0);
  plot.markers(target.waypoints, kBlue, 2.5);
  plot.polyline(lp_pts, kGray, 2.0, true);
  plot.polyline(grad_pts, kOrange, 2.2);
  plot.legend({{"target", kBlue}, {"LP-only", kGray}, {"gradient", kOrange}});
  plot.write_file(report.tracking_svg);

  const double improvement =
      report.total_cost_lp > 0.0
          ? 100.0 * (report.total_cost_lp - report.total_cost_grad) /
                report.total_cost_lp
          : 0.0;
  const double elapsed = seconds_since(t0);
  write_summary(report.summary_txt,
                {{"experiment", "vehicle"},
                 {"sample_size", std::to_string(cfg.sample_size)},
                 {"seed", std::to_string(cfg.seed)},
                 {"horizon", std::to_string(steps)},
                 {"admissible_actions", std::to_string(actions.size())},
                 {"total_cost_lp", fmt(report.total_cost_lp)},
                 {"total_cost_grad", fmt(report.total_cost_grad)},
                 {"improvement_percent", fmt(improvement)},
                 {"lp_seconds", fixed3(lp_seconds)},
                 {"grad_seconds", fixed3(grad_seconds)},
                 {"elapsed_seconds", fixed3(elapsed)}});
  log << "vehicle: total cost LP-only = " << human(report.total_cost_lp)
      << ", gradient = " << human(report.total_cost_grad) << " ("
      << human(improvement) << "% lower)\n";
  log << "vehicle: LP rollout " << fixed3(lp_seconds)
      << " s, gradient rollout " << fixed3(grad_seconds) << " s\n";
  log << "vehicle: wrote " << report.lp_csv << ", " << report.grad_csv << ", "
      << report.tracking_svg << ", " << report.summary_txt << " ("
      << fixed3(elapsed) << " s)\n";
  return report;
}

}  // namespace socgrad::bench
