#pragma once

#include <Eigen/Core>
#include <optional>

#include "omni/angles.hpp"

namespace omni::ctrl {

// Body-frame velocity command of the omnidirectional base.
struct VelocityCommand {
  double vx = 0.0;
  double vy = 0.0;
  double vyaw = 0.0;
};

struct ControllerParams {
  double v_limit = 0.8;                     // m/s, circling forward clamp
  double circle_radius = 2.5;               // d, m
  double period = 10.0;                     // T, s per turn around the panel
  double hysteresis = deg_to_rad(20.0);     // total band width of rsgn
  double fade_time = 2.0;                   // s, alpha ramp 0 -> 1
  double yaw_gain = 3.0;                    // 1/s
  double switch_yaw_tol = deg_to_rad(10.0); // |p_theta| to enter local approach
  double arrive_pos_tol = 0.05;             // m
  double arrive_yaw_tol = deg_to_rad(3.0);  // rad
  double v_max = 4.0;                       // m/s
  double a_max = 5.0;                       // m/s^2
  double engage_distance = 6.0;             // m, panel distance to start circling
  double capture_radius = 0.5;              // m, waypoint capture
  double standoff = 1.2;                    // m, final pose in front of the panel
};

enum class Phase { Navigate, Circle, LocalApproach, Arrived };

struct ControllerState {
  Phase phase = Phase::Navigate;
  int rsgn_sign = 0;       // 0 until the first evaluation latches a sign
  double fade_alpha = 0.0; // monotone within the Circle phase
};

// Panel pose in the robot frame. `yaw` is p_theta: zero when the robot sits
// on the panel's front axis facing it, +-pi when approaching from the back.
struct PanelEgo {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();  // p_x, p_y
  double yaw = 0.0;                                    // p_theta
};

// Signum with hysteresis memory: +1 above +band/2, -1 below -band/2, previous
// sign inside the band. The first evaluation latches sign(p_theta) (+1 on 0).
int rsgn(double p_theta, ControllerState& state, double hysteresis);

// Circling approach command:
//   vx = clamp(p_x - d, -v_limit, v_limit)
//   vy = alpha * rsgn(p_theta) * d * 2*pi / T
//   vyaw = yaw_gain * bearing(panel)
VelocityCommand circle_command(const PanelEgo& panel, const ControllerParams& params,
                               ControllerState& state);

// Ramps the circling fade-in factor; linear over fade_time.
void advance_fade(ControllerState& state, const ControllerParams& params, double dt);

// Final approach: the ego-frame target pose is applied directly as a velocity
// (unit proportional gain), clamped componentwise.
VelocityCommand local_approach_command(const Eigen::Vector3d& target_ego, double v_clamp,
                                       double vyaw_clamp);

// Phase transitions (monotone forward):
//   Navigate -> Circle         confirmed panel within engage_distance
//   Circle -> LocalApproach    |p_theta| < switch_yaw_tol
//   LocalApproach -> Arrived   standoff pose error within arrive tolerances
void step_phase(ControllerState& state, const std::optional<PanelEgo>& panel,
                const ControllerParams& params);

// Ego-frame target at `standoff` in front of the panel, facing it.
Eigen::Vector3d standoff_target_ego(const PanelEgo& panel, double standoff);

}  // namespace omni::ctrl
