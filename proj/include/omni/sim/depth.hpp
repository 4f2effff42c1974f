#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <vector>

#include "omni/sim/scene.hpp"

namespace omni::sim {

// Organized close-range depth image. Missing measurements carry a 0 sentinel;
// valid depths are strictly positive (distance along the optical axis).
// Camera frame: +z optical axis, +x right, +y down (image row direction).
struct DepthFrame {
  int width = 224;
  int height = 171;
  std::vector<float> depth;  // row-major, width*height
  double focal = 210.0;      // px
  double cx = 112.0;
  double cy = 85.5;
  Eigen::Isometry3d camera_pose = Eigen::Isometry3d::Identity();

  static constexpr float kMissing = 0.0f;

  float at(int row, int col) const { return depth[static_cast<std::size_t>(row) * width + col]; }
  float& at(int row, int col) { return depth[static_cast<std::size_t>(row) * width + col]; }
  static bool valid(float d) { return d > 0.0f; }

  int valid_count() const;

  // Back-projects pixel (row, col) to a camera-frame 3D point.
  Eigen::Vector3d unproject(int row, int col) const {
    double z = at(row, col);
    return {(col - cx) / focal * z, (row - cy) / focal * z, z};
  }
};

// Pinhole z-buffer render of the scene boxes (the ground plane is not part of
// close-range depth). Deterministic per seed; `seed` feeds the frame_spec's
// noise hook for future use and is kept for interface stability.
DepthFrame render_depth_frame(const Scene& scene, const Eigen::Isometry3d& camera_pose,
                              const DepthFrame& frame_spec, std::uint64_t seed);

// Drops each valid pixel with probability p_missing and adds N(0, sigma) to
// the survivors. Never turns a missing pixel into a valid one.
DepthFrame perturb_depth(const DepthFrame& frame, double p_missing, double sigma,
                         std::uint64_t seed);

}  // namespace omni::sim
