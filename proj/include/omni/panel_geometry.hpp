#pragma once

#include <Eigen/Core>

namespace omni {

// Dimensions of the manipulation panel used across simulation, detection
// filtering and registration. The panel is a vertical plate with a foot box
// that juts out of the *front* face near the ground; the foot breaks the
// 180-degree yaw symmetry so front and back are distinguishable.
//
// Panel local frame: origin at the plate center projected to the ground,
// +x = front normal, +z = up.
struct PanelGeometry {
  // plate
  double plate_width = 0.76;      // along local y
  double plate_height = 1.00;     // along z, standing on the ground
  double plate_thickness = 0.06;  // along x

  // foot attached to the front face at ground level
  double foot_depth = 0.32;   // along +x, measured from the plate front face
  double foot_height = 0.16;  // along z
  double foot_width = 0.76;   // along y

  Eigen::Vector3d plate_center() const { return {0.0, 0.0, plate_height / 2.0}; }
  Eigen::Vector3d plate_extents() const { return {plate_thickness, plate_width, plate_height}; }

  Eigen::Vector3d foot_center() const {
    return {plate_thickness / 2.0 + foot_depth / 2.0, 0.0, foot_height / 2.0};
  }
  Eigen::Vector3d foot_extents() const { return {foot_depth, foot_width, foot_height}; }

  double footprint() const { return (plate_thickness + foot_depth) * plate_width; }
};

}  // namespace omni
