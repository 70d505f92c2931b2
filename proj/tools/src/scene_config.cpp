#include "platekit_cli/scene_config.hpp"

#include <fstream>
#include <initializer_list>
#include <algorithm>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "platekit/error.hpp"
#include "platekit/units.hpp"

namespace platekit::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw DomainError(path + ": " + msg); }

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(path + "." + key, "unknown key");
  }
}

const json& required(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "missing");
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

double number_or(const json& obj, const std::string& path, const char* key, double fallback) {
  return obj.contains(key) ? number(obj.at(key), path + "." + key) : fallback;
}

Vec3 vec3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) fail(path, "expected [x, y, z]");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]"), number(v[2], path + "[2]")};
}

std::size_t count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

double edge_length(const json& plate, const std::string& path, const char* metres, const char* wavelengths,
                   Wavelength wl) {
  const bool m = plate.contains(metres), w = plate.contains(wavelengths);
  if (m == w) fail(path, std::string("give exactly one of ") + metres + " or " + wavelengths);
  return m ? number(plate.at(metres), path + "." + metres) : number(plate.at(wavelengths), path + "." + wavelengths) * wl.meters();
}

PlateFrame orientation(const json& plate, const Vec3& tx, const Vec3& plate_pos, const planner::TargetRegion& region) {
  const bool has_normal = plate.contains("normal"), has_euler = plate.contains("euler_deg");
  if (has_normal && has_euler) fail("plate", "give at most one of normal or euler_deg");
  if (plate.contains("l1") && !has_normal) fail("plate.l1", "only allowed together with normal");
  if (has_euler) {
    const Vec3 e = vec3(plate.at("euler_deg"), "plate.euler_deg");
    return Rotation::euler_zyz(deg2rad(e.x), deg2rad(e.y), deg2rad(e.z)).apply(PlateFrame{});
  }
  if (!has_normal) {
    // face the centroid of the region
    Vec3 mid{};
    for (const Vec3& p : region.points) mid += p;
    return planner::orient_for_target(tx, plate_pos, mid / static_cast<double>(region.points.size()));
  }
  const UnitVec3 n = UnitVec3::normalize(vec3(plate.at("normal"), "plate.normal"));
  if (!plate.contains("l1")) return planner::frame_from_normal(n);
  return plate_frame(n, UnitVec3::normalize(vec3(plate.at("l1"), "plate.l1")));
}

planner::TargetRegion region_of(const json& r) {
  const std::string path = "region";
  only_keys(r, path, {"corner", "u_edge", "v_edge", "nu", "nv", "points"});
  if (r.contains("points")) {
    if (r.size() != 1) fail(path, "points cannot be combined with a grid description");
    const json& pts = r.at("points");
    if (!pts.is_array()) fail(path + ".points", "expected an array");
    std::vector<Vec3> v;
    for (std::size_t i = 0; i < pts.size(); ++i) v.push_back(vec3(pts[i], path + ".points[" + std::to_string(i) + "]"));
    return planner::TargetRegion::from_points(std::move(v));
  }
  return planner::TargetRegion::grid(vec3(required(r, path, "corner"), path + ".corner"),
                                     vec3(required(r, path, "u_edge"), path + ".u_edge"),
                                     vec3(required(r, path, "v_edge"), path + ".v_edge"),
                                     count(required(r, path, "nu"), path + ".nu"),
                                     count(required(r, path, "nv"), path + ".nv"));
}

}  // namespace

SceneConfig parse_scene_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw ParseError(e.what(), line);
  }
  only_keys(doc, "$", {"frequency_hz", "polarization_deg", "tx", "rx", "plate", "region", "objective"});

  const Wavelength wl = Wavelength::from_frequency(number(required(doc, "$", "frequency_hz"), "frequency_hz"));
  const PolarizationAngle pol = PolarizationAngle::degrees(number_or(doc, "$", "polarization_deg", 90.0));

  const json& tx = required(doc, "$", "tx");
  only_keys(tx, "tx", {"position", "power_dbm", "gain_dbi", "amp_gain_db"});
  planner::LinkBudget budget;
  budget.p_t_dbm = number_or(tx, "tx", "power_dbm", 0.0);
  budget.g_t_dbi = number_or(tx, "tx", "gain_dbi", 0.0);
  budget.amp_gain_db = number_or(tx, "tx", "amp_gain_db", 0.0);
  const Vec3 tx_pos = vec3(required(tx, "tx", "position"), "tx.position");
  if (doc.contains("rx")) {
    only_keys(doc.at("rx"), "rx", {"gain_dbi"});
    budget.g_r_dbi = number_or(doc.at("rx"), "rx", "gain_dbi", 0.0);
  }

  planner::TargetRegion region = region_of(required(doc, "$", "region"));
  planner::Objective objective = planner::Objective::kMaxMinDbm;
  if (doc.contains("objective")) {
    const json& o = doc.at("objective");
    if (o == "max-mean") objective = planner::Objective::kMaxMeanMw;
    else if (o != "max-min") fail("objective", "expected \"max-min\" or \"max-mean\"");
  }

  const json& plate = required(doc, "$", "plate");
  only_keys(plate, "plate", {"position", "l1_m", "l1_wl", "l2_m", "l2_wl", "normal", "l1", "euler_deg"});
  const Vec3 plate_pos = plate.contains("position") ? vec3(plate.at("position"), "plate.position") : Vec3{};
  const double l1 = edge_length(plate, "plate", "l1_m", "l1_wl", wl);
  const double l2 = edge_length(plate, "plate", "l2_m", "l2_wl", wl);
  const PlateFrame frame = orientation(plate, tx_pos, plate_pos, region);
  return {planner::Scene::make(tx_pos, plate_pos, PlateGeometry::make(l1, l2, frame), pol, wl, budget),
          std::move(region), objective};
}

SceneConfig load_scene_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene_config(buf.str());
}

}  // namespace platekit::cli
