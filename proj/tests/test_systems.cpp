#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "socgrad/rng.hpp"
#include "socgrad/systems.hpp"

using namespace socgrad;

namespace {

template <typename A, typename B>
bool same_bits(const A& a, const B& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

Box speed_turn_box() {
  Eigen::VectorXd lo(2), hi(2);
  lo << 0.5, -10.1;
  hi << 1.2, 10.1;
  return Box(lo, hi);
}

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

Eigen::VectorXd vec1(double a) {
  Eigen::VectorXd v(1);
  v << a;
  return v;
}

// Long-double evaluation of the held-input unicycle flow, sharing no code
// with the library. Positions integrate u1*sin(theta), u1*cos(theta) along
// the constant turn rate.
Eigen::VectorXd hold_oracle(const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                            double ts) {
  const long double h = 0.5L * static_cast<long double>(ts) * u[1];
  const long double sinc =
      h == 0.0L ? 1.0L : std::sin(h) / h;
  const long double chord = static_cast<long double>(ts) * u[0] * sinc;
  const long double mid = static_cast<long double>(x[2]) + h;
  return vec3(static_cast<double>(x[0] + chord * std::sin(mid)),
              static_cast<double>(x[1] + chord * std::cos(mid)),
              static_cast<double>(x[2] + ts * u[1]));
}

}  // namespace

TEST_CASE("model constructors validate their parameters") {
  CHECK_NOTHROW(IntegratorModel(0.1, 0.0, Box::interval(-1.0, 1.0)));
  CHECK_THROWS_AS(IntegratorModel(0.0, 0.1, Box::interval(-1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntegratorModel(-0.1, 0.1, Box::interval(-1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntegratorModel(0.1, -0.1, Box::interval(-1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntegratorModel(0.1, 0.1, speed_turn_box()),
                  std::invalid_argument);
  CHECK_NOTHROW(UnicycleModel(0.1, 0.1, speed_turn_box()));
  CHECK_THROWS_AS(UnicycleModel(0.1, 0.1, Box::interval(-1.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("integrator step matches the chain-of-integrators map") {
  const IntegratorModel model(0.1, 0.0, Box::interval(-10.0, 10.0));
  const Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);

  // from rest with unit acceleration
  Eigen::VectorXd next = step_integrator(model, vec2(0.0, 0.0), vec1(1.0), zero2);
  CHECK(next[0] == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(next[1] == doctest::Approx(0.1).epsilon(1e-14));

  // drift plus braking
  next = step_integrator(model, vec2(1.0, 0.5), vec1(-2.0), zero2);
  CHECK(next[0] == doctest::Approx(1.04).epsilon(1e-14));
  CHECK(next[1] == doctest::Approx(0.3).epsilon(1e-14));

  // at the origin with zero control the disturbance passes through exactly
  next = step_integrator(model, zero2, vec1(0.0), vec2(0.3, -0.2));
  CHECK(next[0] == 0.3);
  CHECK(next[1] == -0.2);

  CHECK_THROWS_AS(step_integrator(model, vec3(0, 0, 0), vec1(0.0), zero2),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_integrator(model, zero2, vec2(0.0, 0.0), zero2),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_integrator(model, zero2, vec1(0.0), vec3(0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("unicycle Euler step matches the discretized kinematics") {
  const UnicycleModel model(0.1, 0.0, speed_turn_box());
  const Eigen::VectorXd zero3 = Eigen::VectorXd::Zero(3);

  // heading zero drives along +x2 through the cosine
  Eigen::VectorXd next =
      step_unicycle(model, vec3(0.0, 0.0, 0.0), vec2(1.0, 0.0), zero3);
  CHECK(next[0] == 0.0);
  CHECK(next[1] == 0.1);
  CHECK(next[2] == 0.0);

  // half speed with unit turn rate: position ignores the turn entirely
  next = step_unicycle(model, vec3(0.0, 0.0, 0.0), vec2(0.5, 1.0), zero3);
  CHECK(next[0] == 0.0);
  CHECK(next[1] == 0.05);
  CHECK(next[2] == doctest::Approx(0.1).epsilon(1e-15));

  // heading pi/2 drives along +x1
  next = step_unicycle(model, vec3(0.0, 0.0, 0.5 * std::numbers::pi),
                       vec2(1.0, 0.0), zero3);
  CHECK(next[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(next[1] == doctest::Approx(0.0).epsilon(1e-15));

  // general point, independent arithmetic
  const double th = 0.7;
  next = step_unicycle(model, vec3(0.2, -0.3, th), vec2(0.9, -2.0),
                       vec3(0.01, -0.02, 0.03));
  CHECK(next[0] ==
        doctest::Approx(0.2 + 0.1 * 0.9 * std::sin(th) + 0.01).epsilon(1e-14));
  CHECK(next[1] ==
        doctest::Approx(-0.3 + 0.1 * 0.9 * std::cos(th) - 0.02).epsilon(1e-14));
  CHECK(next[2] == doctest::Approx(th - 0.2 + 0.03).epsilon(1e-14));

  CHECK_THROWS_AS(step_unicycle(model, vec2(0, 0), vec2(1, 0), zero3),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_unicycle(model, zero3, vec1(1), zero3),
                  std::invalid_argument);
}

TEST_CASE("held-input unicycle step follows the exact arc") {
  const UnicycleModel model(0.1, 0.0, speed_turn_box());
  const Eigen::VectorXd zero3 = Eigen::VectorXd::Zero(3);

  SUBCASE("coincides with Euler bitwise at zero turn rate") {
    for (const double th : {0.0, 0.3, -1.2, 2.9}) {
      const Eigen::VectorXd x = vec3(0.4, -0.7, th);
      const Eigen::VectorXd u = vec2(0.9, 0.0);
      CHECK(same_bits(step_unicycle_hold(model, x, u, zero3),
                      step_unicycle(model, x, u, zero3)));
    }
  }

  SUBCASE("matches the independent arc integral for live turn rates") {
    for (const double u2 : {-9.5, -2.5, -0.4, 0.7, 3.3, 10.0}) {
      const Eigen::VectorXd x = vec3(0.2, -0.3, 0.7);
      const Eigen::VectorXd u = vec2(0.9, u2);
      const Eigen::VectorXd got = step_unicycle_hold(model, x, u, zero3);
      // closed-form arc displacement, written the textbook way
      const double dth = 0.1 * u2;
      const double ex =
          0.2 + (0.9 / u2) * (std::cos(0.7) - std::cos(0.7 + dth));
      const double ey =
          -0.3 + (0.9 / u2) * (std::sin(0.7 + dth) - std::sin(0.7));
      CAPTURE(u2);
      CHECK(got[0] == doctest::Approx(ex).epsilon(1e-12));
      CHECK(got[1] == doctest::Approx(ey).epsilon(1e-12));
      CHECK(got[2] == doctest::Approx(0.7 + dth).epsilon(1e-14));
    }
  }

  SUBCASE("stays on the long-double oracle across the series switch") {
    // the small-angle branch takes over around |u2| = 2e-7 at Ts = 0.1
    for (const double u2 :
         {1e-10, 1e-9, 1e-8, 1e-7, 1.9e-7, 2.1e-7, 1e-6, 1e-4, 1e-2}) {
      for (const double sign : {1.0, -1.0}) {
        const Eigen::VectorXd x = vec3(0.2, -0.3, 0.7);
        const Eigen::VectorXd u = vec2(0.9, sign * u2);
        const Eigen::VectorXd got = step_unicycle_hold(model, x, u, zero3);
        const Eigen::VectorXd want = hold_oracle(x, u, 0.1);
        CAPTURE(sign * u2);
        CHECK(std::abs(got[0] - want[0]) <= 1e-13);
        CHECK(std::abs(got[1] - want[1]) <= 1e-13);
        CHECK(got[2] == doctest::Approx(want[2]).epsilon(1e-15));
      }
    }
  }

  SUBCASE("reduces toward Euler as the step shrinks") {
    const Eigen::VectorXd x = vec3(0.1, 0.2, -0.4);
    const Eigen::VectorXd u = vec2(1.1, 3.0);
    for (const double ts : {1e-2, 1e-3, 1e-4}) {
      const UnicycleModel fine(ts, 0.0, speed_turn_box());
      const Eigen::VectorXd a = step_unicycle(fine, x, u, zero3);
      const Eigen::VectorXd b = step_unicycle_hold(fine, x, u, zero3);
      // the two discretizations agree to second order in Ts
      CHECK((a - b).norm() <= 10.0 * ts * ts);
    }
  }
}

TEST_CASE("plants wrap the step maps with their dimensions") {
  const IntegratorModel im(0.1, 0.2, Box::interval(-3.0, 3.0));
  const Plant pi = make_plant(im);
  CHECK(pi.state_dim == 2);
  CHECK(pi.control_dim == 1);
  CHECK(pi.noise_std == 0.2);
  CHECK(pi.control_box.lower[0] == -3.0);
  const Eigen::VectorXd w2 = vec2(0.05, -0.01);
  CHECK(same_bits(pi.step(vec2(1.0, 0.5), vec1(-2.0), w2),
                  step_integrator(im, vec2(1.0, 0.5), vec1(-2.0), w2)));

  const UnicycleModel um(0.1, 0.1, speed_turn_box());
  const Plant pu = make_plant(um);
  CHECK(pu.state_dim == 3);
  CHECK(pu.control_dim == 2);
  const Eigen::VectorXd x = vec3(0.0, 0.0, 0.3);
  const Eigen::VectorXd u = vec2(1.0, 4.0);
  const Eigen::VectorXd zero3 = Eigen::VectorXd::Zero(3);
  // the benchmark plant advances with the held-input arc, not the Euler map
  CHECK(same_bits(pu.step(x, u, zero3), step_unicycle_hold(um, x, u, zero3)));
  CHECK_FALSE(same_bits(pu.step(x, u, zero3), step_unicycle(um, x, u, zero3)));
}

TEST_CASE("draw_sample_set is reproducible and respects its regions") {
  const IntegratorModel model(0.1, 0.1, Box::interval(-5.0, 5.0));
  const Plant plant = make_plant(model);
  const Box region(vec2(-1.0, -1.0), vec2(1.0, 1.0));

  const SampleSet a = draw_sample_set(plant, region, model.box, 300, 42);
  const SampleSet b = draw_sample_set(plant, region, model.box, 300, 42);
  CHECK(same_bits(a.states, b.states));
  CHECK(same_bits(a.controls, b.controls));
  CHECK(same_bits(a.successors, b.successors));

  const SampleSet c = draw_sample_set(plant, region, model.box, 300, 43);
  CHECK_FALSE(same_bits(a.states, c.states));

  REQUIRE(a.size() == 300);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    REQUIRE(region.contains(a.states.row(i).transpose()));
    REQUIRE(model.box.contains(a.controls.row(i).transpose()));
  }

  CHECK_THROWS_AS(draw_sample_set(plant, region, model.box, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      draw_sample_set(plant, Box::interval(-1.0, 1.0), model.box, 10, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(draw_sample_set(plant, region, region, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("a noiseless sample's successors replay the deterministic step") {
  const IntegratorModel model(0.1, 0.0, Box::interval(-5.0, 5.0));
  const Plant plant = make_plant(model);
  const Box region(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  const SampleSet s = draw_sample_set(plant, region, model.box, 50, 7);
  const Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const Eigen::VectorXd y = step_integrator(
        model, s.states.row(i).transpose(), s.controls.row(i).transpose(), zero2);
    REQUIRE(same_bits(Eigen::VectorXd(s.successors.row(i).transpose()), y));
  }
}

TEST_CASE("sample states fill the region uniformly") {
  const IntegratorModel model(0.1, 0.1, Box::interval(-5.0, 5.0));
  const Plant plant = make_plant(model);
  const Box region(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  const SampleSet s = draw_sample_set(plant, region, model.box, 4000, 11);
  // mean within five standard errors of the center, per coordinate
  const double se = (2.0 / std::sqrt(12.0)) / std::sqrt(4000.0);
  for (Eigen::Index d = 0; d < 2; ++d) {
    CHECK(std::abs(s.states.col(d).mean()) <= 5.0 * se);
  }
  const double cse = 10.0 / std::sqrt(12.0) / std::sqrt(4000.0);
  CHECK(std::abs(s.controls.col(0).mean()) <= 5.0 * cse);
}

TEST_CASE("stage costs measure what they claim") {
  CHECK(regulation_cost(vec2(3.0, 4.0)) == 5.0);
  CHECK(regulation_cost(Eigen::VectorXd::Zero(2)) == 0.0);
  CHECK(tracking_cost(vec3(3.0, 4.0, 0.7), Eigen::Vector2d(0.0, 0.0)) == 25.0);
  CHECK(tracking_cost(vec3(1.0, 1.0, 0.7), Eigen::Vector2d(1.0, 2.0)) == 1.0);
  // heading plays no role
  CHECK(tracking_cost(vec3(0.3, -0.4, 2.9), Eigen::Vector2d(0.1, 0.1)) ==
        tracking_cost(vec3(0.3, -0.4, -1.0), Eigen::Vector2d(0.1, 0.1)));
  CHECK_THROWS_AS(tracking_cost(vec1(1.0), Eigen::Vector2d(0.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("integrator oracle minimizes the deterministic next-state norm") {
  const Box wide = Box::interval(-10.0, 10.0);

  // pinned value: at x = [1, 0] the unconstrained minimizer is
  // -0.005 / (0.005^2 + 0.1^2)
  CHECK(oracle_integrator_control(vec2(1.0, 0.0), 0.1, wide) ==
        doctest::Approx(-0.49875311720698254).epsilon(1e-13));

  // local optimality against nudges, random states
  SplitMix64 rng(77);
  const IntegratorModel model(0.1, 0.0, wide);
  const Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::VectorXd x = vec2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const double ustar = oracle_integrator_control(x, 0.1, wide);
    const double base =
        step_integrator(model, x, vec1(ustar), zero2).norm();
    for (const double du : {-0.05, -0.001, 0.001, 0.05}) {
      const double uu = ustar + du;
      if (uu < wide.lower[0] || uu > wide.upper[0]) {
        continue;
      }
      const double moved = step_integrator(model, x, vec1(uu), zero2).norm();
      CAPTURE(trial);
      REQUIRE(moved >= base - 1e-12);
    }
  }

  // clamping to the nearer endpoint
  const Box tight = Box::interval(-0.3, 0.3);
  CHECK(oracle_integrator_control(vec2(1.0, 0.0), 0.1, tight) == -0.3);
  CHECK(oracle_integrator_control(vec2(-1.0, 0.0), 0.1, tight) == 0.3);
}

TEST_CASE("closed-loop rollout bookkeeping") {
  const IntegratorModel model(0.1, 0.0, Box::interval(-3.0, 3.0));
  const Plant plant = make_plant(model);
  const auto zero_controller = [](const Eigen::VectorXd&, Eigen::Index) {
    return Eigen::VectorXd::Zero(1).eval();
  };
  const auto cost = [](const Eigen::VectorXd& x, Eigen::Index) {
    return regulation_cost(x);
  };

  SUBCASE("one noiseless step is the bare dynamics") {
    const auto traj =
        simulate_closed_loop(plant, zero_controller, cost, vec2(0.2, -0.1), 1, 5);
    REQUIRE(traj.states.size() == 2);
    REQUIRE(traj.controls.size() == 1);
    REQUIRE(traj.stage_costs.size() == 2);
    CHECK(same_bits(traj.states[0], vec2(0.2, -0.1)));
    CHECK(traj.states[1][0] == doctest::Approx(0.19).epsilon(1e-14));
    CHECK(traj.states[1][1] == -0.1);
    CHECK(traj.controls[0][0] == 0.0);
  }

  SUBCASE("stage costs are time-indexed and summed left to right") {
    std::vector<Eigen::Index> seen;
    const auto recording_cost = [&seen](const Eigen::VectorXd& x,
                                        Eigen::Index t) {
      seen.push_back(t);
      return regulation_cost(x) + static_cast<double>(t);
    };
    const auto traj = simulate_closed_loop(plant, zero_controller,
                                           recording_cost, vec2(1.0, 0.0), 4, 5);
    REQUIRE(seen.size() == 5);
    for (Eigen::Index t = 0; t <= 4; ++t) {
      CHECK(seen[static_cast<std::size_t>(t)] == t);
    }
    double total = 0.0;
    for (const double c : traj.stage_costs) {
      total += c;
    }
    CHECK(traj.total_cost == total);
  }

  SUBCASE("identical seeds face identical disturbances") {
    const Plant noisy = make_plant(IntegratorModel(0.1, 0.3, model.box));
    const auto a =
        simulate_closed_loop(noisy, zero_controller, cost, vec2(1.0, 0.0), 10, 99);
    const auto b =
        simulate_closed_loop(noisy, zero_controller, cost, vec2(1.0, 0.0), 10, 99);
    for (std::size_t t = 0; t < a.states.size(); ++t) {
      REQUIRE(same_bits(a.states[t], b.states[t]));
    }
    const auto c =
        simulate_closed_loop(noisy, zero_controller, cost, vec2(1.0, 0.0), 10, 98);
    CHECK_FALSE(same_bits(a.states.back(), c.states.back()));
  }

  SUBCASE("a controller output outside the box stops the rollout") {
    const auto rogue = [](const Eigen::VectorXd&, Eigen::Index) {
      return Eigen::VectorXd::Constant(1, 5.0).eval();
    };
    CHECK_THROWS_AS(
        simulate_closed_loop(plant, rogue, cost, vec2(0.0, 0.0), 3, 1),
        std::invalid_argument);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(
        simulate_closed_loop(plant, zero_controller, cost, vec2(0.0, 0.0), 0, 1),
        std::invalid_argument);
    CHECK_THROWS_AS(
        simulate_closed_loop(plant, zero_controller, cost, vec3(0, 0, 0), 3, 1),
        std::invalid_argument);
    Eigen::VectorXd bad = vec2(std::nan(""), 0.0);
    CHECK_THROWS_AS(simulate_closed_loop(plant, zero_controller, cost, bad, 3, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("the oracle controller regulates the noiseless integrator") {
  const Box wide = Box::interval(-10.0, 10.0);
  const IntegratorModel model(0.1, 0.0, wide);
  const Plant plant = make_plant(model);
  const auto controller = [&wide](const Eigen::VectorXd& x, Eigen::Index) {
    return vec1(oracle_integrator_control(x, 0.1, wide));
  };
  const auto cost = [](const Eigen::VectorXd& x, Eigen::Index) {
    return regulation_cost(x);
  };
  const auto traj =
      simulate_closed_loop(plant, controller, cost, vec2(1.0, 0.0), 100, 0);
  // greedy one-step minimization shrinks the norm every step
  for (std::size_t t = 0; t + 1 < traj.stage_costs.size(); ++t) {
    REQUIRE(traj.stage_costs[t + 1] <= traj.stage_costs[t] + 1e-12);
  }
  CHECK(traj.stage_costs.back() < 0.75 * traj.stage_costs.front());
}

TEST_CASE("trajectory CSV lists controls for all but the terminal row") {
  const IntegratorModel model(0.1, 0.1, Box::interval(-3.0, 3.0));
  const Plant plant = make_plant(model);
  const auto controller = [](const Eigen::VectorXd&, Eigen::Index t) {
    return Eigen::VectorXd::Constant(1, 0.1 * static_cast<double>(t)).eval();
  };
  const auto cost = [](const Eigen::VectorXd& x, Eigen::Index) {
    return regulation_cost(x);
  };
  const auto traj =
      simulate_closed_loop(plant, controller, cost, vec2(1.0, 0.0), 5, 3);

  std::stringstream out;
  traj.to_csv(out);
  std::string header;
  REQUIRE(std::getline(out, header));
  CHECK(header == "t,x0,x1,u0,stage_cost");
  std::vector<std::string> lines;
  for (std::string line; std::getline(out, line);) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  REQUIRE(lines.size() == 6);
  // the terminal row leaves the control field empty between its commas
  CHECK(lines.back().find(",,") != std::string::npos);
  for (std::size_t t = 0; t + 1 < lines.size(); ++t) {
    CHECK(lines[t].find(",,") == std::string::npos);
  }
}

TEST_CASE("target trajectories parse and validate their CSV form") {
  SUBCASE("well-formed input") {
    std::stringstream in("t,px,py\n0,-1,-0.2\n1,-0.9,-0.1\n2,-0.8,0.05\n");
    const auto traj = TargetTrajectory::from_csv(in);
    REQUIRE(traj.waypoints.size() == 3);
    CHECK(traj.horizon() == 2);
    CHECK(traj.waypoints[0].x() == -1.0);
    CHECK(traj.waypoints[2].y() == 0.05);
  }

  SUBCASE("rejections") {
    std::stringstream bad_header("time,px,py\n0,0,0\n");
    CHECK_THROWS_AS(TargetTrajectory::from_csv(bad_header),
                    std::invalid_argument);
    std::stringstream no_rows("t,px,py\n");
    CHECK_THROWS_AS(TargetTrajectory::from_csv(no_rows), std::invalid_argument);
    std::stringstream skipped("t,px,py\n0,0,0\n2,1,1\n");
    CHECK_THROWS_WITH_AS(TargetTrajectory::from_csv(skipped),
                         doctest::Contains("line 3"), std::invalid_argument);
    std::stringstream hole("t,px,py\n0,0,\n");
    CHECK_THROWS_WITH_AS(TargetTrajectory::from_csv(hole),
                         doctest::Contains("empty field"),
                         std::invalid_argument);
  }

  SUBCASE("missing file names the path") {
    CHECK_THROWS_AS(TargetTrajectory::from_csv_file("/nonexistent/wp.csv"),
                    std::runtime_error);
  }
}

TEST_CASE("the bundled arc is trackable at the benchmark speeds") {
  const auto traj = TargetTrajectory::default_arc();
  REQUIRE(traj.waypoints.size() == 21);
  CHECK(traj.horizon() == 20);
  CHECK(traj.waypoints[0].x() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(traj.waypoints[0].y() == doctest::Approx(-0.2).epsilon(1e-14));
  // one waypoint per Ts = 0.1 step at speeds in [0.5, 1.2]
  for (std::size_t t = 0; t + 1 < traj.waypoints.size(); ++t) {
    const double gap = (traj.waypoints[t + 1] - traj.waypoints[t]).norm();
    CAPTURE(t);
    REQUIRE(gap > 0.05);
    REQUIRE(gap < 0.12);
  }
  // stays inside the sampled state region
  for (const auto& wp : traj.waypoints) {
    REQUIRE(std::abs(wp.x()) <= 1.2);
    REQUIRE(std::abs(wp.y()) <= 1.2);
  }
}
