#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "omni/kdtree.hpp"
#include "omni/panel_geometry.hpp"

namespace omni::reg {

// Panel reference cloud in the panel local frame (origin at the plate center
// on the ground, +x front). The foot makes the cloud asymmetric under a
// 180-degree yaw so registration can tell front from back.
class PanelModel {
 public:
  PanelModel() = default;
  explicit PanelModel(std::vector<Eigen::Vector3d> points, double footprint = 0.0);

  static PanelModel from_geometry(const PanelGeometry& geom, double sample_spacing = 0.04);

  const std::vector<Eigen::Vector3d>& points() const { return points_; }
  const KdTree3& tree() const { return tree_; }
  double footprint() const { return footprint_; }

 private:
  std::vector<Eigen::Vector3d> points_;
  KdTree3 tree_;
  double footprint_ = 0.0;
};

// Point-cloud files: JSON {schema, version, footprint, points: [[x,y,z],...]}.
PanelModel load_panel_model(const std::string& path);
void save_panel_model(const PanelModel& model, const std::string& path);

}  // namespace omni::reg
