#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>
#include <string>
#include <vector>

#include "omni/panel_geometry.hpp"
#include "omni/pose2.hpp"

namespace omni::sim {

// Yaw-rotated box. `extents` are full side lengths.
struct SceneBox {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d extents = Eigen::Vector3d::Ones();
  double yaw = 0.0;
  std::string label;
};

struct Rect2 {
  Eigen::Vector2d min = Eigen::Vector2d(-50.0, -50.0);
  Eigen::Vector2d max = Eigen::Vector2d(50.0, 50.0);

  bool contains(const Eigen::Vector2d& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y();
  }
};

// World description for the sensor simulators: a ground plane at z = 0 plus
// yaw-parameterized boxes inside a rectangular arena.
struct Scene {
  std::vector<SceneBox> objects;
  Rect2 arena_bounds;
  bool has_ground = true;

  // Ground-truth panel pose, present when the scene was built around a panel.
  std::optional<Pose2> panel_pose;
  PanelGeometry panel;

  void validate() const;  // throws InvalidInput on degenerate boxes/arena
};

// Expands the panel geometry into its component boxes at `pose`.
std::vector<SceneBox> make_panel_boxes(const PanelGeometry& geom, const Pose2& pose);

// Appends panel boxes to the scene and records the ground-truth pose.
void add_panel(Scene& scene, const PanelGeometry& geom, const Pose2& pose);

// Versioned JSON schema (schema: "omni-scene", version: 1).
std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);
Scene load_scene(const std::string& path);
void save_scene(const Scene& scene, const std::string& path);

}  // namespace omni::sim
