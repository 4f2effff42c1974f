#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "omni/angles.hpp"

namespace omni {

// Rigid motion on the ground plane (2D translation + yaw).
struct Pose2 {
  Eigen::Vector2d xy = Eigen::Vector2d::Zero();
  double yaw = 0.0;

  static Pose2 identity() { return {}; }

  Eigen::Rotation2Dd rot() const { return Eigen::Rotation2Dd(yaw); }

  // this ∘ other (apply other in this frame).
  Pose2 compose(const Pose2& other) const {
    return {xy + rot() * other.xy, wrap_angle(yaw + other.yaw)};
  }

  Pose2 inverse() const {
    Eigen::Rotation2Dd r(-yaw);
    return {r * (-xy), wrap_angle(-yaw)};
  }

  Eigen::Vector2d apply(const Eigen::Vector2d& p) const { return xy + rot() * p; }

  // Lifts to a 3D isometry acting on the ground plane.
  Eigen::Isometry3d iso3(double z = 0.0) const {
    Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
    t.translate(Eigen::Vector3d(xy.x(), xy.y(), z));
    t.rotate(Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()));
    return t;
  }
};

inline Pose2 operator*(const Pose2& a, const Pose2& b) { return a.compose(b); }

// 6D pose helper: yaw-pitch-roll applied in ZYX order about the local frame.
inline Eigen::Isometry3d make_pose(const Eigen::Vector3d& t, double yaw, double pitch = 0.0,
                                   double roll = 0.0) {
  Eigen::Isometry3d p = Eigen::Isometry3d::Identity();
  p.translate(t);
  p.rotate(Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
           Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
           Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()));
  return p;
}

}  // namespace omni
