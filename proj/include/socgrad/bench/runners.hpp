#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "socgrad/bench/config.hpp"

namespace socgrad::bench {

/// Each runner validates its config, creates the output directory, writes
/// its CSV/SVG artifacts plus a key=value summary file, prints progress and
/// a one-line result to `log`, and returns the headline numbers so callers
/// (and tests) need not re-parse the files. The emitted CSVs are a pure
/// function of (config, seed); the summary files also carry wall-clock
/// times, which are not.

struct IntegratorReport {
  double mean_abs_err = 0.0;
  double max_abs_err = 0.0;
  double elapsed_seconds = 0.0;
  std::string controls_csv;
  std::string vector_field_svg;
  std::string summary_txt;
};

/// Regulation study: fit on one sample, descend at every grid point, and
/// compare against the closed-form one-step oracle.
IntegratorReport run_integrator(const ExperimentConfig& cfg, std::ostream& log);

struct SweepReport {
  std::vector<Eigen::Index> sample_sizes;  // ascending
  std::vector<double> median_mean_err;     // over repeats, per sample size
  std::vector<double> median_max_err;
  double elapsed_seconds = 0.0;
  std::string sweep_csv;
  std::string sweep_svg;
  std::string summary_txt;
};

/// Integrator error as a function of sample size: repeats x sample sizes
/// independent cells, each a fresh seeded sample and fit.
SweepReport run_error_sweep(const ExperimentConfig& cfg, std::ostream& log);

struct VehicleReport {
  double total_cost_lp = 0.0;
  double total_cost_grad = 0.0;
  double lp_seconds = 0.0;
  double grad_seconds = 0.0;
  std::string lp_csv;
  std::string grad_csv;
  std::string tracking_svg;
  std::string summary_txt;
};

/// Tracking study: one fitted embedding, per-step refreshed cost weights,
/// and two rollouts under identical disturbances differing only in the
/// controller (admissible-set argmin vs argmin plus descent).
VehicleReport run_vehicle(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace socgrad::bench
