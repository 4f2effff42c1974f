#include "omni/sim/scene.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "omni/errors.hpp"

namespace omni::sim {

using nlohmann::ordered_json;

void Scene::validate() const {
  for (const auto& b : objects) {
    if (b.extents.minCoeff() <= 0.0) throw InvalidInput("scene box with non-positive extent");
  }
  if (arena_bounds.max.x() <= arena_bounds.min.x() || arena_bounds.max.y() <= arena_bounds.min.y())
    throw InvalidInput("degenerate arena bounds");
}

std::vector<SceneBox> make_panel_boxes(const PanelGeometry& geom, const Pose2& pose) {
  auto place = [&](const Eigen::Vector3d& local_center, const Eigen::Vector3d& extents,
                   const std::string& label) {
    SceneBox b;
    Eigen::Vector2d c2 = pose.apply(local_center.head<2>());
    b.center = Eigen::Vector3d(c2.x(), c2.y(), local_center.z());
    b.extents = extents;
    b.yaw = pose.yaw;
    b.label = label;
    return b;
  };
  return {place(geom.plate_center(), geom.plate_extents(), "panel-plate"),
          place(geom.foot_center(), geom.foot_extents(), "panel-foot")};
}

void add_panel(Scene& scene, const PanelGeometry& geom, const Pose2& pose) {
  auto boxes = make_panel_boxes(geom, pose);
  scene.objects.insert(scene.objects.end(), boxes.begin(), boxes.end());
  scene.panel_pose = pose;
  scene.panel = geom;
}

namespace {

ordered_json vec3_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

Eigen::Vector3d vec3_from(const ordered_json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

}  // namespace

std::string scene_to_json(const Scene& scene) {
  ordered_json j;
  j["schema"] = "omni-scene";
  j["version"] = 1;
  j["ground"] = scene.has_ground;
  j["arena"] = {{"min", {scene.arena_bounds.min.x(), scene.arena_bounds.min.y()}},
                {"max", {scene.arena_bounds.max.x(), scene.arena_bounds.max.y()}}};
  j["boxes"] = ordered_json::array();
  for (const auto& b : scene.objects) {
    ordered_json jb;
    jb["center"] = vec3_json(b.center);
    jb["extents"] = vec3_json(b.extents);
    jb["yaw"] = b.yaw;
    if (!b.label.empty()) jb["label"] = b.label;
    j["boxes"].push_back(jb);
  }
  if (scene.panel_pose) {
    j["panel"] = {{"pose", {scene.panel_pose->xy.x(), scene.panel_pose->xy.y(), scene.panel_pose->yaw}},
                  {"plate_width", scene.panel.plate_width},
                  {"plate_height", scene.panel.plate_height},
                  {"plate_thickness", scene.panel.plate_thickness},
                  {"foot_depth", scene.panel.foot_depth},
                  {"foot_height", scene.panel.foot_height},
                  {"foot_width", scene.panel.foot_width}};
  }
  return j.dump(2);
}

Scene scene_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.value("schema", "") != "omni-scene") throw IoError("not an omni-scene file");
  if (j.value("version", 0) != 1) throw IoError("unsupported omni-scene version");
  Scene s;
  s.has_ground = j.value("ground", true);
  s.arena_bounds.min = {j["arena"]["min"][0].get<double>(), j["arena"]["min"][1].get<double>()};
  s.arena_bounds.max = {j["arena"]["max"][0].get<double>(), j["arena"]["max"][1].get<double>()};
  for (const auto& jb : j["boxes"]) {
    SceneBox b;
    b.center = vec3_from(jb.at("center"));
    b.extents = vec3_from(jb.at("extents"));
    b.yaw = jb.value("yaw", 0.0);
    b.label = jb.value("label", std::string());
    s.objects.push_back(b);
  }
  if (j.contains("panel")) {
    const auto& jp = j["panel"];
    Pose2 pose;
    pose.xy = {jp["pose"][0].get<double>(), jp["pose"][1].get<double>()};
    pose.yaw = jp["pose"][2].get<double>();
    s.panel_pose = pose;
    s.panel.plate_width = jp.value("plate_width", s.panel.plate_width);
    s.panel.plate_height = jp.value("plate_height", s.panel.plate_height);
    s.panel.plate_thickness = jp.value("plate_thickness", s.panel.plate_thickness);
    s.panel.foot_depth = jp.value("foot_depth", s.panel.foot_depth);
    s.panel.foot_height = jp.value("foot_height", s.panel.foot_height);
    s.panel.foot_width = jp.value("foot_width", s.panel.foot_width);
  }
  s.validate();
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scene_from_json(text);
}

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scene file: " + path);
  out << scene_to_json(scene) << "\n";
}

}  // namespace omni::sim
