#include "omni/sim/depth.hpp"

#include <algorithm>

#include "omni/errors.hpp"
#include "omni/rng.hpp"

namespace omni::sim {

int DepthFrame::valid_count() const {
  return static_cast<int>(std::count_if(depth.begin(), depth.end(), [](float d) { return valid(d); }));
}

DepthFrame render_depth_frame(const Scene& scene, const Eigen::Isometry3d& camera_pose,
                              const DepthFrame& frame_spec, std::uint64_t seed) {
  (void)seed;
  if (frame_spec.focal <= 0.0 || frame_spec.width <= 0 || frame_spec.height <= 0)
    throw InvalidInput("invalid depth frame spec");

  DepthFrame f = frame_spec;
  f.camera_pose = camera_pose;
  f.depth.assign(static_cast<std::size_t>(f.width) * f.height, DepthFrame::kMissing);

  const Eigen::Vector3d origin = camera_pose.translation();
  const Eigen::Matrix3d rot = camera_pose.rotation();

  Scene boxes_only = scene;
  boxes_only.has_ground = false;

  for (int row = 0; row < f.height; ++row) {
    for (int col = 0; col < f.width; ++col) {
      Eigen::Vector3d dir_cam((col - f.cx) / f.focal, (row - f.cy) / f.focal, 1.0);
      double norm = dir_cam.norm();
      double dist = ray_scene_distance(boxes_only, origin, rot * (dir_cam / norm));
      if (!std::isfinite(dist)) continue;
      // store z-depth along the optical axis, not ray length
      f.at(row, col) = static_cast<float>(dist / norm);
    }
  }
  return f;
}

DepthFrame perturb_depth(const DepthFrame& frame, double p_missing, double sigma,
                         std::uint64_t seed) {
  if (p_missing < 0.0 || p_missing > 1.0) throw InvalidInput("p_missing outside [0, 1]");
  if (sigma < 0.0) throw InvalidInput("negative sigma");

  Rng rng(seed);
  DepthFrame out = frame;
  for (auto& d : out.depth) {
    if (!DepthFrame::valid(d)) continue;
    if (p_missing > 0.0 && rng.bernoulli(p_missing)) {
      d = DepthFrame::kMissing;
      continue;
    }
    if (sigma > 0.0)
      d = static_cast<float>(std::max(1e-6, static_cast<double>(d) + rng.normal(sigma)));
  }
  return out;
}

}  // namespace omni::sim
