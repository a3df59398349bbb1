#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace socgrad::bench {

enum class Experiment { Integrator, ErrorSweep, Vehicle };

std::string experiment_name(Experiment e);

/// Accepts "integrator", "error_sweep", "vehicle"; throws otherwise.
Experiment parse_experiment(const std::string& name);

/// Flat, typed benchmark configuration. Every knob of the two studies lives
/// here; defaults(e) fills in the values the experiments are defined with,
/// so an empty config file reproduces the reference runs.
struct ExperimentConfig {
  Experiment experiment = Experiment::Integrator;
  Eigen::Index sample_size = 1600;
  double state_sigma = 3.0;
  double control_sigma = 3.0;
  std::optional<double> regularization;  // absent: 1/M^2 for the M in use
  double step_size = 0.01;
  int max_iters = 100;
  double grad_tol = 1e-6;
  std::uint64_t seed = 1729;
  double sampling_time = 0.1;
  double noise_std = 0.1;
  std::vector<Eigen::Index> eval_grid = {11, 11};       // integrator eval points
  std::vector<Eigen::Index> admissible_counts = {21};   // LP grid per control axis
  Eigen::Index horizon = 20;                            // vehicle steps
  std::string target_path;                              // empty: bundled arc
  std::string out_dir = "out";
  std::vector<Eigen::Index> sweep_sample_sizes = {250, 1000, 2500};
  int sweep_repeats = 20;

  static ExperimentConfig defaults(Experiment e);

  /// Regularization for a fit on m observations: the explicit value if one
  /// was configured, else 1/m^2.
  double lambda_for(Eigen::Index m) const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Parse a flat JSON object over `base`. Unknown keys, wrong types, and an
/// "experiment" value that contradicts base.experiment are errors naming
/// the key.
ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base);

}  // namespace socgrad::bench
