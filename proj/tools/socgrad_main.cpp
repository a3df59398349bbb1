#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "socgrad/bench/config.hpp"
#include "socgrad/bench/runners.hpp"

namespace {

using socgrad::bench::Experiment;
using socgrad::bench::ExperimentConfig;

/// One slot per config key; presence is tracked through CLI11's count() so
/// only flags the user actually passed override the file/defaults.
struct Flags {
  std::string config_path;
  std::int64_t sample_size = 0;
  double state_sigma = 0.0;
  double control_sigma = 0.0;
  double regularization = 0.0;
  double step_size = 0.0;
  std::int64_t max_iters = 0;
  double grad_tol = 0.0;
  std::uint64_t seed = 0;
  double sampling_time = 0.0;
  double noise_std = 0.0;
  std::vector<std::int64_t> eval_grid;
  std::vector<std::int64_t> admissible_counts;
  std::int64_t horizon = 0;
  std::string target_path;
  std::string out_dir;
  std::vector<std::int64_t> sweep_sample_sizes;
  std::int64_t sweep_repeats = 0;
};

void add_options(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config_path, "JSON config file (flat key-value)");
  sub.add_option("--sample_size", f.sample_size, "observations M in the sample");
  sub.add_option("--state_sigma", f.state_sigma, "state kernel bandwidth");
  sub.add_option("--control_sigma", f.control_sigma, "control kernel bandwidth");
  sub.add_option("--regularization", f.regularization,
                 "ridge parameter lambda (default 1/M^2)");
  sub.add_option("--step_size", f.step_size, "descent step size eta");
  sub.add_option("--max_iters", f.max_iters, "descent iteration cap");
  sub.add_option("--grad_tol", f.grad_tol, "gradient norm stopping threshold");
  sub.add_option("--seed", f.seed, "base seed for all randomness");
  sub.add_option("--sampling_time", f.sampling_time, "discretization step Ts");
  sub.add_option("--noise_std", f.noise_std, "disturbance standard deviation");
  sub.add_option("--eval_grid", f.eval_grid,
                 "integrator evaluation grid counts, e.g. 11,11")
      ->delimiter(',');
  sub.add_option("--admissible_counts", f.admissible_counts,
                 "LP grid counts per control axis, e.g. 10,21")
      ->delimiter(',');
  sub.add_option("--horizon", f.horizon, "vehicle rollout steps N");
  sub.add_option("--target_path", f.target_path,
                 "target trajectory CSV (t,px,py); empty uses the bundled arc");
  sub.add_option("--out,--out_dir", f.out_dir, "output directory");
  sub.add_option("--sweep_sample_sizes", f.sweep_sample_sizes,
                 "sweep sample sizes, e.g. 250,1000,2500")
      ->delimiter(',');
  sub.add_option("--sweep_repeats", f.sweep_repeats, "seeded repeats per size");
}

std::vector<Eigen::Index> to_indices(const std::vector<std::int64_t>& v) {
  return std::vector<Eigen::Index>(v.begin(), v.end());
}

ExperimentConfig build_config(const CLI::App& sub, const Flags& f,
                              Experiment experiment) {
  ExperimentConfig cfg = ExperimentConfig::defaults(experiment);
  if (sub.count("--config") > 0) {
    cfg = socgrad::bench::load_config_file(f.config_path, std::move(cfg));
  }
  if (sub.count("--sample_size") > 0) cfg.sample_size = f.sample_size;
  if (sub.count("--state_sigma") > 0) cfg.state_sigma = f.state_sigma;
  if (sub.count("--control_sigma") > 0) cfg.control_sigma = f.control_sigma;
  if (sub.count("--regularization") > 0) cfg.regularization = f.regularization;
  if (sub.count("--step_size") > 0) cfg.step_size = f.step_size;
  if (sub.count("--max_iters") > 0) cfg.max_iters = static_cast<int>(f.max_iters);
  if (sub.count("--grad_tol") > 0) cfg.grad_tol = f.grad_tol;
  if (sub.count("--seed") > 0) cfg.seed = f.seed;
  if (sub.count("--sampling_time") > 0) cfg.sampling_time = f.sampling_time;
  if (sub.count("--noise_std") > 0) cfg.noise_std = f.noise_std;
  if (sub.count("--eval_grid") > 0) cfg.eval_grid = to_indices(f.eval_grid);
  if (sub.count("--admissible_counts") > 0) {
    cfg.admissible_counts = to_indices(f.admissible_counts);
  }
  if (sub.count("--horizon") > 0) cfg.horizon = f.horizon;
  if (sub.count("--target_path") > 0) cfg.target_path = f.target_path;
  if (sub.count("--out") > 0) cfg.out_dir = f.out_dir;
  if (sub.count("--sweep_sample_sizes") > 0) {
    cfg.sweep_sample_sizes = to_indices(f.sweep_sample_sizes);
  }
  if (sub.count("--sweep_repeats") > 0) {
    cfg.sweep_repeats = static_cast<int>(f.sweep_repeats);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"data-driven stochastic optimal control benchmarks"};
  app.require_subcommand(1);
  Flags integrator_flags, sweep_flags, vehicle_flags;
  CLI::App* integrator = app.add_subcommand(
      "integrator", "regulation study with closed-form oracle comparison");
  CLI::App* sweep =
      app.add_subcommand("sweep", "control error as a function of sample size");
  CLI::App* vehicle = app.add_subcommand(
      "vehicle", "target tracking, LP-only vs gradient controller");
  add_options(*integrator, integrator_flags);
  add_options(*sweep, sweep_flags);
  add_options(*vehicle, vehicle_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.get_exit_code() != 0 ? e.get_exit_code() : 1;
  }

  try {
    if (integrator->parsed()) {
      socgrad::bench::run_integrator(
          build_config(*integrator, integrator_flags, Experiment::Integrator),
          std::cout);
    } else if (sweep->parsed()) {
      socgrad::bench::run_error_sweep(
          build_config(*sweep, sweep_flags, Experiment::ErrorSweep), std::cout);
    } else {
      socgrad::bench::run_vehicle(
          build_config(*vehicle, vehicle_flags, Experiment::Vehicle), std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
