#include "omni/reg/registration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "omni/errors.hpp"

namespace omni::reg {

namespace {

struct Correspondence {
  Eigen::Vector3d model_local;
  Eigen::Vector3d cluster_world;
};

// Cluster points are matched against the model in the model's local frame so
// the kd-tree is built once per model.
double gather(const PanelModel& model, const detect::Cluster& cluster, const Pose2& pose,
              double cutoff, std::vector<Correspondence>& out) {
  out.clear();
  Pose2 inv = pose.inverse();
  double sq_sum = 0.0;
  for (const auto& c : cluster.points) {
    Eigen::Vector2d local2 = inv.apply(c.head<2>());
    Eigen::Vector3d local(local2.x(), local2.y(), c.z());
    auto hit = model.tree().nearest(local, cutoff);
    if (hit.index < 0) continue;
    out.push_back({model.points()[hit.index], c});
    sq_sum += hit.sq_dist;
  }
  return out.empty() ? std::numeric_limits<double>::infinity()
                     : std::sqrt(sq_sum / static_cast<double>(out.size()));
}

// Closed-form translation+yaw least squares for fixed correspondences.
Pose2 solve_se2(const std::vector<Correspondence>& pairs) {
  Eigen::Vector2d pm = Eigen::Vector2d::Zero();
  Eigen::Vector2d cm = Eigen::Vector2d::Zero();
  for (const auto& pr : pairs) {
    pm += pr.model_local.head<2>();
    cm += pr.cluster_world.head<2>();
  }
  pm /= static_cast<double>(pairs.size());
  cm /= static_cast<double>(pairs.size());

  double s_cross = 0.0;
  double s_dot = 0.0;
  for (const auto& pr : pairs) {
    Eigen::Vector2d p = pr.model_local.head<2>() - pm;
    Eigen::Vector2d c = pr.cluster_world.head<2>() - cm;
    s_cross += p.x() * c.y() - p.y() * c.x();
    s_dot += p.dot(c);
  }
  double yaw = std::atan2(s_cross, s_dot);
  Eigen::Vector2d t = cm - Eigen::Rotation2Dd(yaw) * pm;
  return {t, yaw};
}

}  // namespace

std::pair<PanelPose, double> icp_se2(const PanelModel& model, const detect::Cluster& cluster,
                                     const PanelPose& init, const RegistrationParams& params,
                                     std::vector<double>* residual_trace) {
  if (cluster.points.empty()) throw InvalidInput("icp_se2: empty cluster");
  if (residual_trace) residual_trace->clear();

  Pose2 pose = init.pose2();
  std::vector<Correspondence> pairs;
  double best_residual = gather(model, cluster, pose, params.correspondence_cutoff, pairs);
  if (pairs.empty())
    throw DegenerateRegistration("icp_se2: no correspondences within cutoff at the initial pose");
  Pose2 best_pose = pose;
  if (residual_trace) residual_trace->push_back(best_residual);

  for (int it = 0; it < params.max_iterations; ++it) {
    Pose2 updated = solve_se2(pairs);
    double residual = gather(model, cluster, updated, params.correspondence_cutoff, pairs);
    if (pairs.empty() || residual > best_residual) break;  // keep the best-so-far monotone
    if (residual_trace) residual_trace->push_back(residual);

    double step = (updated.xy - best_pose.xy).norm() + std::abs(angle_diff(updated.yaw, best_pose.yaw));
    best_pose = updated;
    best_residual = residual;
    if (step < params.convergence_eps) break;
  }
  return {PanelPose::from(best_pose, 0.0, cluster.last_seen), best_residual};
}

std::vector<int> visible_subset(const PanelModel& model, const PanelPose& pose,
                                const Eigen::Isometry3d& sensor_pose,
                                const RegistrationParams& params) {
  const Eigen::Isometry3d world_from_model = pose.pose2().iso3();
  const Eigen::Isometry3d sensor_from_world = sensor_pose.inverse();

  struct Sample {
    double range;
    long bin;
  };
  std::vector<Sample> samples(model.points().size());
  std::unordered_map<long, double> min_range;
  min_range.reserve(model.points().size());

  const long az_bins = static_cast<long>(std::ceil(2.0 * kPi / params.visibility_azimuth_res)) + 1;
  for (std::size_t i = 0; i < model.points().size(); ++i) {
    Eigen::Vector3d s = sensor_from_world * (world_from_model * model.points()[i]);
    double range = s.norm();
    double az = std::atan2(s.y(), s.x());
    double el = std::asin(std::clamp(s.z() / std::max(range, 1e-12), -1.0, 1.0));
    long a = static_cast<long>(std::floor((az + kPi) / params.visibility_azimuth_res));
    long e = static_cast<long>(std::floor((el + kPi / 2) / params.visibility_elevation_res));
    long bin = e * az_bins + a;
    samples[i] = {range, bin};
    auto it = min_range.find(bin);
    if (it == min_range.end() || range < it->second) min_range[bin] = range;
  }

  std::vector<int> visible;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].range <= min_range[samples[i].bin] + params.visibility_depth_tol)
      visible.push_back(static_cast<int>(i));
  return visible;
}

double score_pose(const PanelModel& model, const detect::Cluster& cluster, const PanelPose& pose,
                  const Eigen::Isometry3d& sensor_pose, const RegistrationParams& params) {
  if (cluster.points.empty()) throw InvalidInput("score_pose: empty cluster");
  const Pose2 p2 = pose.pose2();

  // model -> cluster over visible model points
  double model_term = 0.0;
  std::vector<int> visible = visible_subset(model, pose, sensor_pose, params);
  if (!visible.empty()) {
    KdTree3 cluster_tree(cluster.points);
    double sum = 0.0;
    for (int idx : visible) {
      const Eigen::Vector3d& m = model.points()[idx];
      Eigen::Vector2d w2 = p2.apply(m.head<2>());
      sum += std::sqrt(cluster_tree.nearest(Eigen::Vector3d(w2.x(), w2.y(), m.z())).sq_dist);
    }
    model_term = sum / static_cast<double>(visible.size());
  }

  // cluster -> model, ground-proximal points up-weighted
  const Pose2 inv = p2.inverse();
  double cluster_term = 0.0;
  for (const auto& c : cluster.points) {
    Eigen::Vector2d local2 = inv.apply(c.head<2>());
    double d = std::sqrt(model.tree().nearest(Eigen::Vector3d(local2.x(), local2.y(), c.z())).sq_dist);
    double w = 1.0 + params.ground_weight_scale * std::max(0.0, params.ground_z_ref - c.z());
    cluster_term += w * d;
  }

  return params.model_term_weight * model_term + params.cluster_term_weight * cluster_term;
}

PanelPose register_panel(const PanelModel& model, const detect::Cluster& cluster,
                         const Eigen::Isometry3d& sensor_pose, const RegistrationParams& params) {
  if (cluster.points.empty()) throw InvalidInput("register_panel: empty cluster");
  const int seeds = std::max(1, static_cast<int>(std::lround(2.0 * kPi / params.seed_yaw_step)));

  bool found = false;
  PanelPose best;
  double best_score = std::numeric_limits<double>::infinity();
  for (int s = 0; s < seeds; ++s) {
    PanelPose init;
    init.x = cluster.centroid.x();
    init.y = cluster.centroid.y();
    init.yaw = wrap_angle(s * params.seed_yaw_step);
    try {
      auto [pose, residual] = icp_se2(model, cluster, init, params);
      (void)residual;
      double score = score_pose(model, cluster, pose, sensor_pose, params);
      if (score < best_score) {
        best_score = score;
        best = pose;
        found = true;
      }
    } catch (const DegenerateRegistration&) {
      continue;
    }
  }
  if (!found) throw RegistrationFailed("register_panel: every yaw seed was degenerate");
  best.score = best_score;
  best.timestamp = cluster.last_seen;
  return best;
}

PanelPose lowpass_pose(const PanelPose& prev, const PanelPose& fresh, double robot_yaw_rate,
                       double lambda0, double k) {
  if (lambda0 <= 0.0 || lambda0 > 1.0) throw InvalidInput("lowpass_pose: lambda0 outside (0, 1]");
  if (k < 0.0) throw InvalidInput("lowpass_pose: negative rate gain");
  double lambda = lambda0 / (1.0 + k * std::abs(robot_yaw_rate));
  PanelPose out;
  out.x = prev.x + lambda * (fresh.x - prev.x);
  out.y = prev.y + lambda * (fresh.y - prev.y);
  out.yaw = wrap_angle(prev.yaw + lambda * angle_diff(fresh.yaw, prev.yaw));
  out.score = fresh.score;
  out.timestamp = fresh.timestamp;
  return out;
}

}  // namespace omni::reg
