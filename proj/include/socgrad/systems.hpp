#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "socgrad/box.hpp"
#include "socgrad/embedding.hpp"

namespace socgrad {

/// Discrete-time 2-D chain of integrators with scalar acceleration input and
/// additive Gaussian disturbance: x' = A x + B u + w with
/// A = [[1, Ts], [0, 1]] and B = [Ts^2/2, Ts].
struct IntegratorModel {
  double sampling_time;
  double noise_std;  // disturbance is N(0, noise_std^2 I); 0 is allowed
  Box box;           // scalar control interval

  IntegratorModel(double ts, double noise, Box control_box);
};

/// Nonholonomic unicycle with forward speed u1 and turn rate u2, sampled at
/// Ts with additive Gaussian disturbance on all three states. Two one-step
/// maps are provided: step_unicycle (forward Euler) and step_unicycle_hold
/// (exact flow under the input held constant over the step); the benchmark
/// plant uses the hold map, where u2 steers the within-step position arc.
struct UnicycleModel {
  double sampling_time;
  double noise_std;
  Box box;  // (forward speed, turn rate) bounds

  UnicycleModel(double ts, double noise, Box control_box);
};

Eigen::VectorXd step_integrator(const IntegratorModel& model,
                                const Eigen::VectorXd& x,
                                const Eigen::VectorXd& u,
                                const Eigen::VectorXd& noise);

Eigen::VectorXd step_unicycle(const UnicycleModel& model,
                              const Eigen::VectorXd& x,
                              const Eigen::VectorXd& u,
                              const Eigen::VectorXd& noise);

/// Exact one-step flow of the unicycle with (u1, u2) held constant over the
/// sampling interval: the position traces a circular arc of turn angle
/// Ts*u2.  Coincides with step_unicycle as u2 -> 0 and is evaluated in a
/// cancellation-free form, so u2 = 0 is exact.
Eigen::VectorXd step_unicycle_hold(const UnicycleModel& model,
                                   const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& noise);

/// Type-erased plant: enough of a model for sample generation and
/// closed-loop simulation without templating on the concrete dynamics.
struct Plant {
  Eigen::Index state_dim;
  Eigen::Index control_dim;
  Box control_box;
  double noise_std;
  std::function<Eigen::VectorXd(const Eigen::VectorXd& x,
                                const Eigen::VectorXd& u,
                                const Eigen::VectorXd& noise)>
      step;
};

Plant make_plant(const IntegratorModel& model);
Plant make_plant(const UnicycleModel& model);

/// M i.i.d. transitions: states uniform over state_region, controls uniform
/// over control_box, successors stepped under a fresh Gaussian noise draw.
/// Per observation the generator is consumed in a fixed order (state
/// coordinates, control coordinates, then the noise vector), so the result
/// is bitwise reproducible for a given seed.
SampleSet draw_sample_set(const Plant& plant, const Box& state_region,
                          const Box& control_box, Eigen::Index count,
                          std::uint64_t seed);

/// Euclidean norm of the state; drives regulation toward the origin.
double regulation_cost(const Eigen::VectorXd& x);

/// Squared Euclidean distance of the position (first two state components)
/// to the target point; heading does not enter.
double tracking_cost(const Eigen::VectorXd& x, const Eigen::Vector2d& target);

/// Exact minimizer of the deterministic next-state norm ||A x + B u|| over
/// the control interval: the unconstrained 1-D quadratic minimizer
/// -B'(A x)/(B'B), clamped. Stands in for a convex solver baseline.
double oracle_integrator_control(const Eigen::VectorXd& x, double sampling_time,
                                 const Box& box);

/// Reference positions indexed by time step 0..N.
struct TargetTrajectory {
  std::vector<Eigen::Vector2d> waypoints;

  Eigen::Index horizon() const {
    return static_cast<Eigen::Index>(waypoints.size()) - 1;
  }

  /// CSV with columns t,px,py and consecutive indices t = 0..N. Parse and
  /// structure errors name the file and line.
  static TargetTrajectory from_csv(std::istream& in);
  static TargetTrajectory from_csv_file(const std::string& path);

  /// Bundled default: 21 waypoints along a quarter arc starting at
  /// (-1, -0.2). Spacing is about 0.09 per step so tracking it at Ts = 0.1
  /// needs a forward speed near 0.9, inside the speed bounds.
  static TargetTrajectory default_arc();
};

/// One closed-loop rollout: N+1 states, N controls, and a stage cost per
/// state (time-indexed). total_cost is the left-to-right sum of
/// stage_costs exactly as stored.
struct Trajectory {
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> controls;
  std::vector<double> stage_costs;
  double total_cost = 0.0;

  /// CSV with columns t,x0..x{n-1},u0..u{m-1},stage_cost; the terminal row
  /// leaves the control fields empty.
  void to_csv(std::ostream& out) const;
  void to_csv_file(const std::string& path) const;
};

/// Roll the plant forward N steps from x0. The controller and stage cost
/// both see the time index; per step exactly one noise vector is drawn, so
/// two rollouts with the same seed face identical disturbances even when
/// their controllers differ. Throws if the controller ever returns a
/// control outside the plant's box.
Trajectory simulate_closed_loop(
    const Plant& plant,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd& x, Eigen::Index t)>&
        controller,
    const std::function<double(const Eigen::VectorXd& x, Eigen::Index t)>&
        stage_cost,
    const Eigen::VectorXd& x0, Eigen::Index horizon, std::uint64_t seed);

}  // namespace socgrad
