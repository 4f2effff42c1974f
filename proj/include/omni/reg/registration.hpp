#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <vector>

#include "omni/angles.hpp"
#include "omni/detect/clustering.hpp"
#include "omni/pose2.hpp"
#include "omni/reg/panel_model.hpp"

namespace omni::reg {

// Ground-plane pose of the panel with registration score (lower = better).
struct PanelPose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // normalized to (-pi, pi]
  double score = 0.0;
  double timestamp = 0.0;

  Pose2 pose2() const { return {{x, y}, yaw}; }
  static PanelPose from(const Pose2& p, double score = 0.0, double t = 0.0) {
    return {p.xy.x(), p.xy.y(), wrap_angle(p.yaw), score, t};
  }
};

struct RegistrationParams {
  double seed_yaw_step = deg_to_rad(30.0);  // must divide 2*pi
  int max_iterations = 40;
  double convergence_eps = 1e-4;       // meters (pose-change norm)
  double correspondence_cutoff = 1.0;  // meters
  // combined score
  double model_term_weight = 1.0;
  double cluster_term_weight = 1.0;
  double ground_weight_scale = 4.0;  // 1/m
  double ground_z_ref = 0.5;         // m; points below get up-weighted
  // visibility range image
  double visibility_azimuth_res = deg_to_rad(0.2);
  double visibility_elevation_res = deg_to_rad(2.0);
  double visibility_depth_tol = 0.05;
};

// SE(2)-constrained ICP of the panel model onto a cluster. Alternates
// nearest-neighbour correspondences (within the cutoff) with a closed-form
// translation+yaw least-squares update. The returned residual is the RMS
// correspondence distance; the per-iteration residual sequence (optionally
// exposed via `residual_trace`) is non-increasing. Throws
// DegenerateRegistration when no correspondences fall inside the cutoff.
std::pair<PanelPose, double> icp_se2(const PanelModel& model, const detect::Cluster& cluster,
                                     const PanelPose& init, const RegistrationParams& params,
                                     std::vector<double>* residual_trace = nullptr);

// Indices of model points (at `pose`) that survive an azimuth-elevation range
// image visibility test from `sensor_pose`: a point is visible iff it lies
// within the depth tolerance of the minimum range in its angular bin.
std::vector<int> visible_subset(const PanelModel& model, const PanelPose& pose,
                                const Eigen::Isometry3d& sensor_pose,
                                const RegistrationParams& params);

// Combined registration score:
//   model_term_weight * mean over visible model points of nearest-cluster
//   distance + cluster_term_weight * sum over cluster points of
//   w(z) * nearest-model distance, with w(z) = 1 + scale * max(0, z_ref - z).
double score_pose(const PanelModel& model, const detect::Cluster& cluster, const PanelPose& pose,
                  const Eigen::Isometry3d& sensor_pose, const RegistrationParams& params);

// Multi-start registration: ICP from 2*pi/seed_yaw_step yaw seeds centered on
// the cluster centroid; returns the score argmin over converged seeds.
// Throws RegistrationFailed when every seed is degenerate.
PanelPose register_panel(const PanelModel& model, const detect::Cluster& cluster,
                         const Eigen::Isometry3d& sensor_pose, const RegistrationParams& params);

// Pose low-pass with a blend factor that stiffens while the robot is turning:
//   lambda = lambda0 / (1 + k * |robot_yaw_rate|), yaw blended on the circle.
PanelPose lowpass_pose(const PanelPose& prev, const PanelPose& fresh, double robot_yaw_rate,
                       double lambda0, double k);

}  // namespace omni::reg
