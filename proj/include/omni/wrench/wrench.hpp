#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omni/pose2.hpp"
#include "omni/reg/registration.hpp"

namespace omni::wrench {

enum class DetectionClass { Head, Mouth };

// Bounding-box detection of a wrench end (center + size, confidence in [0,1]).
struct Detection {
  DetectionClass cls = DetectionClass::Head;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();  // px (x, y)
  Eigen::Vector2d box = Eigen::Vector2d(10, 10);     // px (w, h)
  double confidence = 1.0;
};

// Grayscale image, row-major.
struct IntensityImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;

  std::uint8_t at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return values[static_cast<std::size_t>(row) * width + col];
  }
};

struct WrenchHypothesis {
  Detection head;
  Detection mouth;
  double pixel_length = 0.0;   // px
  double metric_length = 0.0;  // m
  double match_cost = 0.0;     // px, horizontal deviation
};

struct CameraModel {
  double focal = 3500.0;  // px
  double cx = 960.0;
  double cy = 600.0;
  Eigen::Isometry3d pose = Eigen::Isometry3d::Identity();  // camera-from-world inverse
};

// The wrenches hang at a common height, so head centers are collinear: fit a
// least-squares line through them and replace each y by the line value (x is
// preserved). Throws InsufficientDetections for fewer than two heads.
std::vector<Detection> refine_heads(const std::vector<Detection>& heads);

// Shifts each mouth vertically (at most search_radius) to the row with the
// strongest vertical intensity gradient in its column neighbourhood.
std::vector<Detection> snap_mouths(const std::vector<Detection>& mouths,
                                   const IntensityImage& image, int search_radius = 10);

// Greedy one-to-one matching of heads to mouths by horizontal deviation.
std::vector<WrenchHypothesis> match_wrenches(const std::vector<Detection>& heads,
                                             const std::vector<Detection>& mouths);

// Metric length via similar triangles: pixel_length * depth / focal, with the
// depth taken from the camera-ray intersection with the registered panel
// plane (the vertical plane through the panel pose, normal along its facing).
// Throws InvalidGeometry when the plane lies behind the camera.
std::vector<WrenchHypothesis> estimate_lengths(std::vector<WrenchHypothesis> pairs,
                                               const reg::PanelPose& panel,
                                               const CameraModel& cam);

// Assigns each pair its nearest expected length; returns the pair mapped to
// target_index with the smallest assignment error. Throws SelectionFailed
// when no pair maps to the target.
WrenchHypothesis select_wrench(const std::vector<WrenchHypothesis>& pairs,
                               const std::vector<double>& expected_lengths, int target_index);

// Mean of two independent estimates when they agree within tol, otherwise
// empty (caller retriggers capture).
std::optional<Eigen::Vector3d> stereo_agree(const Eigen::Vector3d& pose_a,
                                            const Eigen::Vector3d& pose_b, double tol = 0.025);

// 3D point where the pixel ray meets the panel plane (world frame).
Eigen::Vector3d pixel_to_panel_plane(const Eigen::Vector2d& px, const reg::PanelPose& panel,
                                     const CameraModel& cam);

// ---- synthetic detection provider ------------------------------------------

// One hanging wrench: head mounted at `mount_x` (panel-local lateral offset,
// meters), mouth `length` below it.
struct SceneWrench {
  double length = 0.2;   // m
  double mount_x = 0.0;  // m along the panel face
};

struct WrenchSceneConfig {
  std::vector<SceneWrench> wrenches;
  double mount_height = 0.9;  // m above ground
};

struct WrenchCapture {
  std::vector<Detection> heads;
  std::vector<Detection> mouths;
  IntensityImage image;
};

// Projects wrench endpoints through the camera, adds Gaussian pixel jitter to
// the detections and renders a matching white-on-black image (the image
// itself is noise-free). Deterministic per seed.
WrenchCapture synth_detections(const WrenchSceneConfig& scene, const reg::PanelPose& panel,
                               const CameraModel& cam, double jitter_sigma_px,
                               std::uint64_t seed);

// Ground-truth world positions of head and mouth endpoints for a scene.
std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> wrench_endpoints_world(
    const WrenchSceneConfig& scene, const reg::PanelPose& panel);

// ---- detection provider interface -------------------------------------------

// Any source yielding (heads, mouths, image) per capture: the synthetic
// generator above, or recorded detector outputs replayed from files.
class DetectionProvider {
 public:
  virtual ~DetectionProvider() = default;
  virtual WrenchCapture capture(int camera_index) = 0;
};

class SyntheticProvider : public DetectionProvider {
 public:
  SyntheticProvider(WrenchSceneConfig scene, reg::PanelPose panel, std::vector<CameraModel> cams,
                    double jitter_sigma_px, std::uint64_t seed)
      : scene_(std::move(scene)), panel_(panel), cams_(std::move(cams)),
        jitter_(jitter_sigma_px), seed_(seed) {}

  WrenchCapture capture(int camera_index) override;

 private:
  WrenchSceneConfig scene_;
  reg::PanelPose panel_;
  std::vector<CameraModel> cams_;
  double jitter_;
  std::uint64_t seed_;
  std::uint64_t calls_ = 0;
};

// Reads detections from a structured-text (JSON) file; the image is optional
// and referenced as a PGM path next to the detections.
class FileProvider : public DetectionProvider {
 public:
  explicit FileProvider(std::vector<std::string> capture_paths)
      : paths_(std::move(capture_paths)) {}

  WrenchCapture capture(int camera_index) override;

 private:
  std::vector<std::string> paths_;
};

WrenchCapture load_capture(const std::string& path);
void save_capture(const WrenchCapture& capture, const std::string& path,
                  const std::string& image_pgm_path = "");

void save_pgm(const IntensityImage& image, const std::string& path);
IntensityImage load_pgm(const std::string& path);

}  // namespace omni::wrench
