#include "platekit/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "platekit/error.hpp"
#include "platekit/link.hpp"
#include "platekit/parallel.hpp"
#include "platekit/units.hpp"

namespace platekit::planner {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

Scene Scene::make(const Vec3& tx_pos, const Vec3& plate_pos, const PlateGeometry& plate, PolarizationAngle pol,
                  Wavelength wl, const LinkBudget& link) {
  if (norm(plate_pos - tx_pos) == 0.0) throw DomainError("transmitter and plate positions coincide");
  Scene s{tx_pos, plate_pos, plate, pol, wl, link};
  if (!(dot(plate.frame.n, s.incident_direction()) < 0.0)) {
    throw DomainError("plate normal faces away from the transmitter");
  }
  return s;
}

UnitVec3 Scene::incident_direction() const { return UnitVec3::normalize(plate_pos - tx_pos); }

double Scene::tx_distance() const { return norm(plate_pos - tx_pos); }

TargetRegion TargetRegion::grid(const Vec3& corner, const Vec3& u_edge, const Vec3& v_edge, std::size_t nu,
                                std::size_t nv) {
  if (nu == 0 || nv == 0) throw DomainError("target grid must have at least one row and column");
  TargetRegion r;
  r.rows = nv;
  r.cols = nu;
  r.points.reserve(nu * nv);
  for (std::size_t j = 0; j < nv; ++j) {
    const double fv = nv > 1 ? static_cast<double>(j) / static_cast<double>(nv - 1) : 0.0;
    for (std::size_t i = 0; i < nu; ++i) {
      const double fu = nu > 1 ? static_cast<double>(i) / static_cast<double>(nu - 1) : 0.0;
      r.points.push_back(corner + fu * u_edge + fv * v_edge);
    }
  }
  return r;
}

TargetRegion TargetRegion::from_points(std::vector<Vec3> points) {
  if (points.empty()) throw DomainError("target region is empty");
  TargetRegion r;
  r.rows = 1;
  r.cols = points.size();
  r.points = std::move(points);
  return r;
}

PlateFrame frame_from_normal(const UnitVec3& n) {
  const Vec3 horizontal = cross(n, UnitVec3::ez());
  if (norm(horizontal) < 1e-9) return plate_frame(n, UnitVec3::ex());
  return plate_frame(n, UnitVec3::normalize(horizontal));
}

PlateFrame frame_from_normal_angles(double zenith, double azimuth) {
  const double st = std::sin(zenith);
  return frame_from_normal(UnitVec3::normalize({st * std::cos(azimuth), st * std::sin(azimuth), std::cos(zenith)}));
}

PlateFrame orient_for_target(const Vec3& tx_pos, const Vec3& plate_pos, const Vec3& target_pos) {
  if (norm(plate_pos - tx_pos) == 0.0 || norm(target_pos - plate_pos) == 0.0) {
    throw DomainError("transmitter, plate and target positions must be distinct");
  }
  const UnitVec3 a_t = UnitVec3::normalize(plate_pos - tx_pos);
  const UnitVec3 a_r = UnitVec3::normalize(target_pos - plate_pos);
  const Vec3 bisector = a_r.vec() - a_t.vec();
  if (norm(bisector) < 1e-12) throw DomainError("target lies on the continuation of the incident ray");
  return frame_from_normal(UnitVec3::normalize(bisector));
}

namespace {

struct Evaluator {
  const Scene& scene;
  const TargetRegion& region;
  UnitVec3 a_t;
  PolarizationTriad triad;
  double d_t;

  explicit Evaluator(const Scene& s, const TargetRegion& r)
      : scene(s), region(r), a_t(s.incident_direction()), triad(polarization_triad(a_t, s.pol)), d_t(s.tx_distance()) {}

  CoverageCell cell(const PlateGeometry& plate, const Vec3& point) const {
    CoverageCell c;
    const Vec3 offset = point - scene.plate_pos;
    const double d_r = norm(offset);
    if (d_r == 0.0 || !(dot(plate.frame.n, a_t) < 0.0)) {
      c.shadow = true;
      c.p_r_dbm = kNegInf;
      return c;
    }
    const UnitVec3 a_r = UnitVec3::normalize(offset);
    if (!(dot(plate.frame.n, a_r) > 0.0)) {
      c.shadow = true;
      c.p_r_dbm = kNegInf;
      return c;
    }
    c.sigma = rcs(plate, a_t, triad.a_h, a_r, scene.wavelength).sigma;
    const link::LinkScenario ls{scene.link.p_t_dbm, scene.link.g_t_dbi,   scene.link.g_r_dbi,
                                scene.link.amp_gain_db, d_t, d_r, scene.wavelength.meters()};
    c.p_r_dbm = link::received_power(ls, c.sigma);
    return c;
  }

  double objective(const PlateGeometry& plate, Objective obj) const {
    if (obj == Objective::kMaxMinDbm) {
      double worst = std::numeric_limits<double>::infinity();
      for (const Vec3& p : region.points) {
        worst = std::min(worst, cell(plate, p).p_r_dbm);
        if (worst == kNegInf) break;
      }
      return worst;
    }
    double total_mw = 0.0;
    for (const Vec3& p : region.points) {
      const double dbm = cell(plate, p).p_r_dbm;
      if (dbm != kNegInf) total_mw += dbm_to_mw(dbm);
    }
    return mw_to_dbm(total_mw / static_cast<double>(region.points.size()));
  }
};

struct Candidate {
  double zenith;   // deg
  double azimuth;  // deg
};

double wrap_azimuth(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  return a;
}

// Evaluates all candidates (in parallel) and returns the index of the first
// strictly best feasible one, or nullopt if none faces the transmitter.
// Objective per candidate; NaN where the plate would face away from the TX.
std::vector<double> evaluate_all(const Evaluator& ev, const std::vector<Candidate>& cands, Objective obj) {
  std::vector<double> values(cands.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for(cands.size(), [&](std::size_t i) {
    const PlateFrame f = frame_from_normal_angles(deg2rad(cands[i].zenith), deg2rad(cands[i].azimuth));
    if (!(dot(f.n, ev.a_t) < 0.0)) return;
    values[i] = ev.objective(PlateGeometry{ev.scene.plate.l1_len, ev.scene.plate.l2_len, f}, obj);
  });
  return values;
}

std::optional<std::pair<std::size_t, double>> best_of(const Evaluator& ev, const std::vector<Candidate>& cands,
                                                      Objective obj) {
  const std::vector<double> values = evaluate_all(ev, cands, obj);
  std::optional<std::pair<std::size_t, double>> best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) continue;
    if (!best || values[i] > best->second) best = {i, values[i]};
  }
  return best;
}

std::vector<Candidate> full_grid(double step_deg) {
  std::vector<Candidate> cands;
  const int nz = static_cast<int>(std::floor(180.0 / step_deg + 1e-9));
  const int na = static_cast<int>(std::ceil(360.0 / step_deg - 1e-9));
  for (int i = 0; i <= nz; ++i) {
    for (int j = 0; j < na; ++j) cands.push_back({i * step_deg, j * step_deg});
  }
  return cands;
}

OrientationResult make_result(const Candidate& c, double value) {
  OrientationResult r;
  r.frame = frame_from_normal_angles(deg2rad(c.zenith), deg2rad(c.azimuth));
  r.zenith_deg = c.zenith;
  r.azimuth_deg = c.azimuth;
  r.objective = value;
  return r;
}

void check_region(const TargetRegion& region) {
  if (region.points.empty()) throw DomainError("target region is empty");
}

}  // namespace

CoverageMap coverage_map(const Scene& scene, const TargetRegion& region) {
  const Evaluator ev(scene, region);
  CoverageMap map;
  map.rows = region.rows;
  map.cols = region.cols;
  map.cells.resize(region.points.size());
  parallel_for(region.points.size(), [&](std::size_t i) { map.cells[i] = ev.cell(scene.plate, region.points[i]); });
  return map;
}

double evaluate_objective(const CoverageMap& map, Objective objective) {
  if (map.cells.empty()) throw DomainError("coverage map is empty");
  if (objective == Objective::kMaxMinDbm) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : map.cells) worst = std::min(worst, c.p_r_dbm);
    return worst;
  }
  double total_mw = 0.0;
  for (const auto& c : map.cells) {
    if (c.p_r_dbm != kNegInf) total_mw += dbm_to_mw(c.p_r_dbm);
  }
  return mw_to_dbm(total_mw / static_cast<double>(map.cells.size()));
}

OrientationResult optimize_orientation(const Scene& scene, const TargetRegion& region, Objective objective,
                                       const SearchOptions& options) {
  check_region(region);
  if (!(options.coarse_step_deg > 0.0) || options.refinement_factor < 2 || options.starts < 1) {
    throw DomainError("invalid search options");
  }
  const Evaluator ev(scene, region);

  const std::vector<Candidate> coarse = full_grid(options.coarse_step_deg);
  const std::vector<double> coarse_values = evaluate_all(ev, coarse, objective);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    if (!std::isnan(coarse_values[i])) order.push_back(i);
  }
  if (order.empty()) throw DomainError("no orientation on the search grid faces the transmitter");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return coarse_values[x] > coarse_values[y]; });
  order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(options.starts)));

  std::optional<OrientationResult> best;
  for (std::size_t start : order) {
    Candidate incumbent = coarse[start];
    double value = coarse_values[start];
    std::vector<double> history{value};
    double step = options.coarse_step_deg;
    for (int level = 1; level <= options.max_refinements; ++level) {
      const double fine = step / options.refinement_factor;
      std::vector<Candidate> local;
      for (int i = -options.refinement_factor; i <= options.refinement_factor; ++i) {
        const double z = incumbent.zenith + i * fine;
        if (z < 0.0 || z > 180.0) continue;
        for (int j = -options.refinement_factor; j <= options.refinement_factor; ++j) {
          local.push_back({z, wrap_azimuth(incumbent.azimuth + j * fine)});
        }
      }
      double improvement = 0.0;
      if (const auto found = best_of(ev, local, objective); found && found->second > value) {
        improvement = value == kNegInf ? std::numeric_limits<double>::infinity() : found->second - value;
        incumbent = local[found->first];
        value = found->second;
      }
      history.push_back(value);
      step = fine;
      if (level >= options.min_refinements && improvement < options.halt_improvement_db) break;
    }
    if (!best || value > best->objective) {
      best = make_result(incumbent, value);
      best->level_objectives = std::move(history);
    }
  }
  return *best;
}

OrientationResult brute_force_orientation(const Scene& scene, const TargetRegion& region, Objective objective,
                                          double step_deg) {
  check_region(region);
  if (!(step_deg > 0.0)) throw DomainError("grid step must be positive");
  const Evaluator ev(scene, region);
  const std::vector<Candidate> grid = full_grid(step_deg);
  const auto best = best_of(ev, grid, objective);
  if (!best) throw DomainError("no orientation on the search grid faces the transmitter");
  OrientationResult r = make_result(grid[best->first], best->second);
  r.level_objectives = {best->second};
  return r;
}

}  // namespace platekit::planner
