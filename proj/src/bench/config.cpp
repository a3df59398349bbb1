#include "socgrad/bench/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace socgrad::bench {

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Integrator: return "integrator";
    case Experiment::ErrorSweep: return "error_sweep";
    case Experiment::Vehicle: return "vehicle";
  }
  throw std::logic_error("experiment_name: unreachable");
}

Experiment parse_experiment(const std::string& name) {
  if (name == "integrator") return Experiment::Integrator;
  if (name == "error_sweep") return Experiment::ErrorSweep;
  if (name == "vehicle") return Experiment::Vehicle;
  throw std::invalid_argument("config: unknown experiment '" + name +
                              "' (expected integrator, error_sweep, or vehicle)");
}

ExperimentConfig ExperimentConfig::defaults(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  switch (e) {
    case Experiment::Integrator:
    case Experiment::ErrorSweep:
      break;  // struct initializers are the integrator study's values
    case Experiment::Vehicle:
      cfg.sample_size = 3000;
      cfg.step_size = 0.1;
      cfg.admissible_counts = {10, 21};
      break;
  }
  return cfg;
}

double ExperimentConfig::lambda_for(Eigen::Index m) const {
  if (regularization.has_value()) {
    return *regularization;
  }
  const double md = static_cast<double>(m);
  return 1.0 / (md * md);
}

namespace {

void require_positive(const char* field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("config: ") + field +
                                " must be positive and finite");
  }
}

void require_counts(const char* field, const std::vector<Eigen::Index>& counts,
                    std::size_t expected_len) {
  if (counts.size() != expected_len) {
    throw std::invalid_argument(std::string("config: ") + field + " must have " +
                                std::to_string(expected_len) + " entries, got " +
                                std::to_string(counts.size()));
  }
  for (const Eigen::Index c : counts) {
    if (c < 1) {
      throw std::invalid_argument(std::string("config: ") + field +
                                  " entries must be at least 1");
    }
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (sample_size < 1) {
    throw std::invalid_argument("config: sample_size must be at least 1");
  }
  require_positive("state_sigma", state_sigma);
  require_positive("control_sigma", control_sigma);
  if (regularization.has_value()) {
    require_positive("regularization", *regularization);
  }
  require_positive("step_size", step_size);
  if (max_iters < 1) {
    throw std::invalid_argument("config: max_iters must be at least 1");
  }
  if (std::isnan(grad_tol) || grad_tol < 0.0) {
    throw std::invalid_argument("config: grad_tol must be non-negative");
  }
  require_positive("sampling_time", sampling_time);
  if (noise_std < 0.0 || !std::isfinite(noise_std)) {
    throw std::invalid_argument("config: noise_std must be non-negative and finite");
  }
  if (out_dir.empty()) {
    throw std::invalid_argument("config: out_dir must not be empty");
  }
  switch (experiment) {
    case Experiment::Integrator:
      require_counts("eval_grid", eval_grid, 2);
      require_counts("admissible_counts", admissible_counts, 1);
      break;
    case Experiment::ErrorSweep: {
      require_counts("eval_grid", eval_grid, 2);
      require_counts("admissible_counts", admissible_counts, 1);
      if (sweep_sample_sizes.empty()) {
        throw std::invalid_argument("config: sweep_sample_sizes must not be empty");
      }
      std::set<Eigen::Index> seen;
      for (const Eigen::Index m : sweep_sample_sizes) {
        if (m < 1) {
          throw std::invalid_argument(
              "config: sweep_sample_sizes entries must be at least 1");
        }
        if (!seen.insert(m).second) {
          throw std::invalid_argument(
              "config: sweep_sample_sizes entries must be distinct");
        }
      }
      if (sweep_repeats < 1) {
        throw std::invalid_argument("config: sweep_repeats must be at least 1");
      }
      break;
    }
    case Experiment::Vehicle:
      require_counts("admissible_counts", admissible_counts, 2);
      if (horizon < 1) {
        throw std::invalid_argument("config: horizon must be at least 1");
      }
      break;
  }
}

namespace {

using nlohmann::json;

double as_double(const json& v, const std::string& key) {
  if (!v.is_number()) {
    throw std::invalid_argument("config: key '" + key + "' must be a number");
  }
  return v.get<double>();
}

Eigen::Index as_index(const json& v, const std::string& key) {
  if (!v.is_number_integer()) {
    throw std::invalid_argument("config: key '" + key + "' must be an integer");
  }
  return v.get<Eigen::Index>();
}

std::vector<Eigen::Index> as_index_list(const json& v, const std::string& key) {
  if (!v.is_array()) {
    throw std::invalid_argument("config: key '" + key +
                                "' must be an array of integers");
  }
  std::vector<Eigen::Index> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    out.push_back(as_index(item, key));
  }
  return out;
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) {
    throw std::invalid_argument("config: key '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("config: " + path + ": top level must be an object");
  }
  ExperimentConfig cfg = std::move(base);
  for (const auto& [key, value] : doc.items()) {
    if (key == "experiment") {
      const Experiment named = parse_experiment(as_string(value, key));
      if (named != cfg.experiment) {
        throw std::invalid_argument("config: file is for experiment '" +
                                    experiment_name(named) +
                                    "' but the command selects '" +
                                    experiment_name(cfg.experiment) + "'");
      }
    } else if (key == "sample_size") {
      cfg.sample_size = as_index(value, key);
    } else if (key == "state_sigma") {
      cfg.state_sigma = as_double(value, key);
    } else if (key == "control_sigma") {
      cfg.control_sigma = as_double(value, key);
    } else if (key == "regularization") {
      cfg.regularization = as_double(value, key);
    } else if (key == "step_size") {
      cfg.step_size = as_double(value, key);
    } else if (key == "max_iters") {
      cfg.max_iters = static_cast<int>(as_index(value, key));
    } else if (key == "grad_tol") {
      cfg.grad_tol = as_double(value, key);
    } else if (key == "seed") {
      if (!value.is_number_integer() ||
          (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
        throw std::invalid_argument(
            "config: key 'seed' must be a non-negative integer");
      }
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "sampling_time") {
      cfg.sampling_time = as_double(value, key);
    } else if (key == "noise_std") {
      cfg.noise_std = as_double(value, key);
    } else if (key == "eval_grid") {
      cfg.eval_grid = as_index_list(value, key);
    } else if (key == "admissible_counts") {
      cfg.admissible_counts = as_index_list(value, key);
    } else if (key == "horizon") {
      cfg.horizon = as_index(value, key);
    } else if (key == "target_path") {
      cfg.target_path = as_string(value, key);
    } else if (key == "out_dir") {
      cfg.out_dir = as_string(value, key);
    } else if (key == "sweep_sample_sizes") {
      cfg.sweep_sample_sizes = as_index_list(value, key);
    } else if (key == "sweep_repeats") {
      cfg.sweep_repeats = static_cast<int>(as_index(value, key));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

}  // namespace socgrad::bench
