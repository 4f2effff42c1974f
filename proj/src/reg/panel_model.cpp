#include "omni/reg/panel_model.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "omni/errors.hpp"

namespace omni::reg {

PanelModel::PanelModel(std::vector<Eigen::Vector3d> points, double footprint)
    : points_(std::move(points)), tree_(points_), footprint_(footprint) {
  if (points_.empty()) throw InvalidInput("panel model must not be empty");
}

namespace {

// Samples the surface of an axis-aligned box (local frame) on a regular grid.
void sample_box(std::vector<Eigen::Vector3d>& out, const Eigen::Vector3d& center,
                const Eigen::Vector3d& extents, double spacing) {
  Eigen::Vector3d half = extents / 2.0;
  auto steps = [&](double len) { return std::max(1, static_cast<int>(std::round(len / spacing))); };
  int nx = steps(extents.x()), ny = steps(extents.y()), nz = steps(extents.z());

  auto lerp = [](double lo, double hi, int i, int n) {
    return n == 0 ? lo : lo + (hi - lo) * i / n;
  };
  // two faces per axis
  for (int i = 0; i <= ny; ++i)
    for (int j = 0; j <= nz; ++j) {
      double y = lerp(-half.y(), half.y(), i, ny), z = lerp(-half.z(), half.z(), j, nz);
      out.push_back(center + Eigen::Vector3d(-half.x(), y, z));
      out.push_back(center + Eigen::Vector3d(half.x(), y, z));
    }
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= nz; ++j) {
      double x = lerp(-half.x(), half.x(), i, nx), z = lerp(-half.z(), half.z(), j, nz);
      out.push_back(center + Eigen::Vector3d(x, -half.y(), z));
      out.push_back(center + Eigen::Vector3d(x, half.y(), z));
    }
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      double x = lerp(-half.x(), half.x(), i, nx), y = lerp(-half.y(), half.y(), j, ny);
      out.push_back(center + Eigen::Vector3d(x, y, -half.z()));
      out.push_back(center + Eigen::Vector3d(x, y, half.z()));
    }
}

}  // namespace

PanelModel PanelModel::from_geometry(const PanelGeometry& geom, double sample_spacing) {
  std::vector<Eigen::Vector3d> pts;
  sample_box(pts, geom.plate_center(), geom.plate_extents(), sample_spacing);
  sample_box(pts, geom.foot_center(), geom.foot_extents(), sample_spacing);
  return PanelModel(std::move(pts), geom.footprint());
}

PanelModel load_panel_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open panel model: " + path);
  nlohmann::json j;
  in >> j;
  if (j.value("schema", "") != "omni-panel-model") throw IoError("not a panel model file");
  std::vector<Eigen::Vector3d> pts;
  for (const auto& jp : j.at("points"))
    pts.emplace_back(jp.at(0).get<double>(), jp.at(1).get<double>(), jp.at(2).get<double>());
  return PanelModel(std::move(pts), j.value("footprint", 0.0));
}

void save_panel_model(const PanelModel& model, const std::string& path) {
  nlohmann::ordered_json j;
  j["schema"] = "omni-panel-model";
  j["version"] = 1;
  j["footprint"] = model.footprint();
  auto& arr = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : model.points()) arr.push_back({p.x(), p.y(), p.z()});
  std::ofstream out(path);
  if (!out) throw IoError("cannot write panel model: " + path);
  out << j.dump() << "\n";
}

}  // namespace omni::reg
