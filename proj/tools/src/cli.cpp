#include "platekit_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "platekit/error.hpp"
#include "platekit/format.hpp"
#include "platekit/link.hpp"
#include "platekit/measure.hpp"
#include "platekit/planner.hpp"
#include "platekit/rcs.hpp"
#include "platekit/units.hpp"
#include "platekit/validation.hpp"
#include "platekit_cli/scene_config.hpp"
#include "platekit_cli/svg.hpp"

namespace platekit::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValidationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return format_number(v, 10); }

// JSON has no infinities; "no signal" keeps its file-format spelling.
ordered_json jnum(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw IoError("failed writing " + path);
}

// ---- plate and wave flags shared by rcs and sweep

struct PlateFlags {
  double freq_hz = 3e9;
  double l1_wl = 0, l2_wl = 0, l1_m = 0, l2_m = 0;
  std::vector<double> euler_deg;
  bool xy_plane = false;
  double theta_t_deg = 0, phi_t_deg = 0, pol_deg = 90, phi_r_deg = 0;

  CLI::Option* opt_l1_wl = nullptr;
  CLI::Option* opt_l2_wl = nullptr;
  CLI::Option* opt_l1_m = nullptr;
  CLI::Option* opt_l2_m = nullptr;
  CLI::Option* opt_euler = nullptr;

  void add(CLI::App* app) {
    app->add_option("--freq-hz", freq_hz, "carrier frequency")->capture_default_str();
    opt_l1_wl = app->add_option("--l1-wl", l1_wl, "edge L1 in wavelengths");
    opt_l2_wl = app->add_option("--l2-wl", l2_wl, "edge L2 in wavelengths");
    opt_l1_m = app->add_option("--l1-m", l1_m, "edge L1 in meters");
    opt_l2_m = app->add_option("--l2-m", l2_m, "edge L2 in meters");
    opt_euler = app->add_option("--euler-deg", euler_deg, "z-y-z Euler angles applied to the canonical plate")
                    ->expected(3);
    auto* xy = app->add_flag("--xy-plane", xy_plane, "plate in the x-y plane (default)");
    opt_euler->excludes(xy);
    app->add_option("--theta-t-deg", theta_t_deg, "zenith of the transmitter")->capture_default_str();
    app->add_option("--phi-t-deg", phi_t_deg, "azimuth of the transmitter")->capture_default_str();
    app->add_option("--pol-deg", pol_deg, "polarization angle of the incident E field")->capture_default_str();
  }

  bool rotated() const { return !euler_deg.empty(); }

  Wavelength wavelength() const {
    if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) throw UsageError("--freq-hz must be positive");
    return Wavelength::from_frequency(freq_hz);
  }

  PlateGeometry plate() const {
    const bool in_wl = opt_l1_wl->count() || opt_l2_wl->count();
    const bool in_m = opt_l1_m->count() || opt_l2_m->count();
    if (in_wl && in_m) throw UsageError("conflicting size flags: use --l1-wl/--l2-wl or --l1-m/--l2-m");
    if (!in_wl && !in_m) throw UsageError("plate size required: --l1-wl/--l2-wl or --l1-m/--l2-m");
    double l1 = 0, l2 = 0;
    if (in_wl) {
      if (!opt_l1_wl->count() || !opt_l2_wl->count()) throw UsageError("give both --l1-wl and --l2-wl");
      l1 = l1_wl * wavelength().meters();
      l2 = l2_wl * wavelength().meters();
    } else {
      if (!opt_l1_m->count() || !opt_l2_m->count()) throw UsageError("give both --l1-m and --l2-m");
      l1 = l1_m;
      l2 = l2_m;
    }
    if (!(l1 > 0.0) || !(l2 > 0.0)) throw UsageError("plate edges must be positive");
    PlateFrame frame;
    if (rotated()) {
      frame = Rotation::euler_zyz(deg2rad(euler_deg[0]), deg2rad(euler_deg[1]), deg2rad(euler_deg[2])).apply(frame);
    }
    return PlateGeometry::make(l1, l2, frame);
  }

  // Global angles. A plate in the x-y plane only admits the front hemisphere.
  SphericalAngles checked(double theta_deg, double phi_deg, const char* what) const {
    const double theta_max = rotated() ? 180.0 : 90.0;
    if (!(theta_deg >= 0.0 && theta_deg <= theta_max)) {
      throw UsageError(std::string(what) + " zenith must lie in [0, " + num(theta_max) + "] degrees");
    }
    if (!(phi_deg >= 0.0 && phi_deg < 360.0)) throw UsageError(std::string(what) + " azimuth must lie in [0, 360)");
    return {deg2rad(theta_deg), deg2rad(phi_deg)};
  }

  PolarizationTriad triad() const {
    if (!(pol_deg >= 0.0 && pol_deg <= 360.0)) throw UsageError("--pol-deg must lie in [0, 360]");
    const SphericalAngles inc = checked(theta_t_deg, phi_t_deg, "transmitter");
    const PolarizationAngle pol = PolarizationAngle::degrees(pol_deg);
    return rotated() ? polarization_triad(-unit_direction(inc.theta, inc.phi), pol) : polarization_triad(inc, pol);
  }

  UnitVec3 receiver(double theta_deg, double phi_deg) const {
    const SphericalAngles a = checked(theta_deg, phi_deg, "receiver");
    return rotated() ? unit_direction(a.theta, a.phi) : observation_direction(a);
  }
};

// ---- rcs

struct RcsCmd {
  PlateFlags plate;
  double theta_r_deg = 0;
  std::string format = "text";
  std::string output;

  void add(CLI::App* app) {
    plate.add(app);
    app->add_option("--theta-r-deg", theta_r_deg, "zenith of the receiver")->capture_default_str();
    app->add_option("--phi-r-deg", plate.phi_r_deg, "azimuth of the receiver")->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app->add_option("-o,--output", output, "output file (default stdout)");
  }

  std::string execute() const {
    const Wavelength wl = plate.wavelength();
    const PlateGeometry geom = plate.plate();
    const PolarizationTriad t = plate.triad();
    const UnitVec3 a_r = plate.receiver(theta_r_deg, plate.phi_r_deg);
    const RcsBreakdown b = rcs(geom, t.a_t, t.a_h, a_r, wl);
    if (format == "json") {
      ordered_json j;
      j["sigma_m2"] = b.sigma;
      j["sigma_dbsm"] = jnum(to_dbsm(b.sigma));
      j["sigma_max_m2"] = b.sigma_max;
      j["f_js"] = b.f_js;
      j["f_af"] = b.f_af;
      j["front_side_valid"] = b.front_side_valid;
      return j.dump(2) + "\n";
    }
    std::ostringstream s;
    s << "sigma_m2=" << num(b.sigma) << "\n"
      << "sigma_dbsm=" << num(to_dbsm(b.sigma)) << "\n"
      << "sigma_max_m2=" << num(b.sigma_max) << "\n"
      << "f_js=" << num(b.f_js) << "\n"
      << "f_af=" << num(b.f_af) << "\n"
      << "front_side_valid=" << (b.front_side_valid ? "true" : "false") << "\n";
    return s.str();
  }
};

// ---- sweep

struct SweepCmd {
  PlateFlags plate;
  double start = 0, stop = 90, step = 5;
  bool table1 = false;
  std::string pol_case;
  double p_t_dbm = 0, g_t_dbi = 0, g_r_dbi = 0, amp_gain_db = 0, d_t = 0, d_r = 0;
  std::string format = "csv";
  std::string output;

  CLI::Option* opt_d_t = nullptr;
  CLI::Option* opt_d_r = nullptr;
  CLI::Option* opt_case = nullptr;
  std::vector<CLI::Option*> link_opts;

  void add(CLI::App* app) {
    plate.add(app);
    plate.phi_r_deg = 90;
    app->add_option("--phi-r-deg", plate.phi_r_deg, "azimuth of the receiver arc")->capture_default_str();
    app->add_option("--theta-r-start", start)->capture_default_str();
    app->add_option("--theta-r-stop", stop)->capture_default_str();
    app->add_option("--theta-r-step", step)->capture_default_str();
    app->add_flag("--table1", table1, "3 GHz bench: 5x5 wavelength plate, 16 dBi horns, 8 m legs");
    opt_case = app->add_option("--case", pol_case, "corollary1 (pol 90) or corollary2 (pol 0)")
                   ->check(CLI::IsMember({"corollary1", "corollary2"}));
    link_opts = {app->add_option("--p-t-dbm", p_t_dbm), app->add_option("--g-t-dbi", g_t_dbi),
                 app->add_option("--g-r-dbi", g_r_dbi), app->add_option("--amp-gain-db", amp_gain_db)};
    opt_d_t = app->add_option("--d-t-m", d_t, "transmitter to plate distance");
    opt_d_r = app->add_option("--d-r-m", d_r, "plate to receiver distance");
    app->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}))->capture_default_str();
    app->add_option("-o,--output", output, "output file (default stdout)");
  }

  std::vector<double> grid() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("--theta-r-step must be positive");
    if (!(stop >= start)) throw UsageError("--theta-r-stop must not be below --theta-r-start");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = start + static_cast<double>(i) * step;
    return g;
  }

  std::string execute() const {
    const std::vector<double> thetas = grid();
    std::vector<double> sigma(thetas.size());
    std::optional<link::LinkScenario> budget;

    if (table1) {
      if (plate.opt_l1_wl->count() || plate.opt_l1_m->count() || plate.opt_l2_wl->count() ||
          plate.opt_l2_m->count() || plate.rotated()) {
        throw UsageError("--table1 fixes the plate; drop the size and orientation flags");
      }
      const measure::ExperimentConfig cfg = measure::ExperimentConfig::table1(plate.theta_t_deg);
      const auto pc = pol_case == "corollary2" ? measure::PolarizationCase::kCorollary2
                                               : measure::PolarizationCase::kCorollary1;
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        check_theta_r(thetas[i]);
        sigma[i] = measure::theoretical_rcs(cfg, pc, thetas[i]);
      }
      budget = cfg.link();
    } else {
      if (opt_case->count()) throw UsageError("--case needs --table1; use --pol-deg otherwise");
      const Wavelength wl = plate.wavelength();
      const PlateGeometry geom = plate.plate();
      const PolarizationTriad t = plate.triad();
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        const UnitVec3 a_r = plate.receiver(thetas[i], plate.phi_r_deg);
        sigma[i] = rcs(geom, t.a_t, t.a_h, a_r, wl).sigma;
      }
      const bool any_link = opt_d_t->count() || opt_d_r->count() ||
                            std::any_of(link_opts.begin(), link_opts.end(), [](auto* o) { return o->count() > 0; });
      if (any_link) {
        if (!opt_d_t->count() || !opt_d_r->count()) throw UsageError("the power column needs --d-t-m and --d-r-m");
        link::LinkScenario s{p_t_dbm, g_t_dbi, g_r_dbi, amp_gain_db, d_t, d_r, wl.meters()};
        try {
          s.validate();
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
        budget = s;
      }
    }

    std::vector<double> p_r;
    if (budget) {
      for (double s : sigma) p_r.push_back(link::received_power(*budget, s));
    }
    return render(thetas, sigma, p_r);
  }

  static void check_theta_r(double theta) {
    if (!(theta >= 0.0 && theta <= 90.0)) throw UsageError("receiver zenith must lie in [0, 90] degrees");
  }

  std::string render(const std::vector<double>& thetas, const std::vector<double>& sigma,
                     const std::vector<double>& p_r) const {
    if (format == "json") {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        ordered_json r;
        r["theta_r_deg"] = thetas[i];
        r["sigma_m2"] = sigma[i];
        r["sigma_dbsm"] = jnum(to_dbsm(sigma[i]));
        if (!p_r.empty()) r["p_r_dbm"] = jnum(p_r[i]);
        rows.push_back(r);
      }
      return rows.dump(2) + "\n";
    }
    if (format == "svg") {
      std::vector<double> db(sigma.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) db[i] = p_r.empty() ? to_dbsm(sigma[i]) : p_r[i];
      return line_plot({{p_r.empty() ? "RCS" : "received power", thetas, db, false}}, "Bistatic sweep",
                       "theta_r (deg)", p_r.empty() ? "RCS (dBsm)" : "P_r (dBm)");
    }
    std::ostringstream s;
    s << "theta_r_deg,sigma_m2,sigma_dbsm" << (p_r.empty() ? "" : ",p_r_dbm") << "\n";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      s << num(thetas[i]) << "," << num(sigma[i]) << "," << num(to_dbsm(sigma[i]));
      if (!p_r.empty()) s << "," << num(p_r[i]);
      s << "\n";
    }
    return s.str();
  }
};

// ---- validate

struct ValidateCmd {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int nodes_per_edge = 0;
  double tol = 1e-6;
  std::string format = "text";
  std::string output;
  CLI::Option* opt_nodes = nullptr;

  void add(CLI::App* app) {
    app->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    opt_nodes = app->add_option("--nodes-per-edge", nodes_per_edge, "override the automatic quadrature order")
                    ->check(CLI::Range(2, 100000));
    app->add_option("--tol", tol, "maximum accepted relative error")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    app->add_option("-o,--output", output, "output file (default stdout)");
  }

  std::string execute(bool& passed) const {
    const auto report = po::run_validation(trials, seed, opt_nodes->count() ? std::optional<int>(nodes_per_edge)
                                                                            : std::nullopt);
    passed = report.max_rel_error <= tol;
    if (format == "csv") {
      std::ostringstream s;
      s << "trial,closed_form_m2,oracle_m2,rel_error,nodes_per_edge\n";
      for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& t = report.trials[i];
        s << i << "," << format_number(t.closed_form, 17) << "," << format_number(t.oracle, 17) << ","
          << format_number(t.rel_error, 6) << "," << t.nodes_per_edge << "\n";
      }
      return s.str();
    }
    if (format == "json") {
      ordered_json j;
      j["trials"] = trials;
      j["seed"] = seed;
      j["max_rel_error"] = report.max_rel_error;
      j["worst_trial"] = report.worst_trial;
      j["tol"] = tol;
      j["pass"] = passed;
      return j.dump(2) + "\n";
    }
    std::ostringstream s;
    s << "trials=" << trials << "\n"
      << "seed=" << seed << "\n"
      << "max_rel_error=" << format_number(report.max_rel_error, 6) << "\n"
      << "worst_trial=" << report.worst_trial << "\n"
      << "tol=" << num(tol) << "\n"
      << "status=" << (passed ? "PASS" : "FAIL") << "\n";
    return s.str();
  }
};

// ---- coverage

std::string coverage_csv(const planner::TargetRegion& region, const planner::CoverageMap& map) {
  std::ostringstream s;
  s << "row,col,x,y,z,shadow,sigma_m2,p_r_dbm\n";
  for (std::size_t r = 0; r < map.rows; ++r) {
    for (std::size_t c = 0; c < map.cols; ++c) {
      const Vec3& p = region.points[r * map.cols + c];
      const auto& cell = map.at(r, c);
      s << r << "," << c << "," << num(p.x) << "," << num(p.y) << "," << num(p.z) << "," << (cell.shadow ? 1 : 0)
        << "," << num(cell.sigma) << "," << num(cell.p_r_dbm) << "\n";
    }
  }
  return s.str();
}

struct CoverageCmd {
  std::string config;
  std::string output;
  std::string svg;
  std::string format = "csv";
  double db_min = 0, db_max = 0;
  CLI::Option* opt_min = nullptr;
  CLI::Option* opt_max = nullptr;

  void add(CLI::App* app) {
    app->add_option("--config", config, "scene JSON")->required();
    app->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("-o,--output", output, "output file (default stdout)");
    app->add_option("--svg", svg, "also write a heatmap to this file");
    opt_min = app->add_option("--db-min", db_min, "lower end of the color scale (default: data minimum)");
    opt_max = app->add_option("--db-max", db_max, "upper end of the color scale (default: data maximum)");
  }

  std::string execute(std::string& svg_text) const {
    const SceneConfig cfg = load_scene_config(config);
    const planner::CoverageMap map = planner::coverage_map(cfg.scene, cfg.region);
    if (!svg.empty()) {
      std::vector<double> db;
      std::vector<bool> shadow;
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& cell : map.cells) {
        db.push_back(cell.p_r_dbm);
        shadow.push_back(cell.shadow);
        if (std::isfinite(cell.p_r_dbm)) {
          lo = std::min(lo, cell.p_r_dbm);
          hi = std::max(hi, cell.p_r_dbm);
        }
      }
      if (!std::isfinite(lo)) lo = hi = 0.0;
      if (opt_min->count()) lo = db_min;
      if (opt_max->count()) hi = db_max;
      if (!(hi >= lo)) throw UsageError("--db-max must not be below --db-min");
      svg_text = heatmap(db, shadow, map.rows, map.cols, lo, hi, "Received power (dBm)");
    }
    if (format == "json") {
      ordered_json cells = ordered_json::array();
      for (std::size_t r = 0; r < map.rows; ++r) {
        for (std::size_t c = 0; c < map.cols; ++c) {
          const Vec3& p = cfg.region.points[r * map.cols + c];
          const auto& cell = map.at(r, c);
          cells.push_back({{"row", r}, {"col", c}, {"position", {p.x, p.y, p.z}}, {"shadow", cell.shadow},
                           {"sigma_m2", cell.sigma}, {"p_r_dbm", jnum(cell.p_r_dbm)}});
        }
      }
      ordered_json j;
      j["rows"] = map.rows;
      j["cols"] = map.cols;
      j["cells"] = cells;
      return j.dump(2) + "\n";
    }
    return coverage_csv(cfg.region, map);
  }
};

// ---- optimize

struct OptimizeCmd {
  std::string config;
  std::string objective;
  std::string output;
  std::string coverage;
  std::string format = "text";
  planner::SearchOptions options;

  void add(CLI::App* app) {
    app->add_option("--config", config, "scene JSON")->required();
    app->add_option("--objective", objective, "override the config objective")
        ->check(CLI::IsMember({"max-min", "max-mean"}));
    app->add_option("--coarse-step-deg", options.coarse_step_deg)->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--starts", options.starts, "coarse cells refined independently")
        ->check(CLI::Range(1, 10000))
        ->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app->add_option("-o,--output", output, "output file (default stdout)");
    app->add_option("--coverage", coverage, "write the optimized coverage CSV to this file");
  }

  std::string execute(std::string& coverage_text) const {
    const SceneConfig cfg = load_scene_config(config);
    planner::Objective obj = cfg.objective;
    if (objective == "max-min") obj = planner::Objective::kMaxMinDbm;
    if (objective == "max-mean") obj = planner::Objective::kMaxMeanMw;

    const double configured = planner::evaluate_objective(planner::coverage_map(cfg.scene, cfg.region), obj);
    const planner::OrientationResult best = planner::optimize_orientation(cfg.scene, cfg.region, obj, options);
    planner::Scene tuned = cfg.scene;
    tuned.plate.frame = best.frame;
    const planner::CoverageMap map = planner::coverage_map(tuned, cfg.region);
    if (!coverage.empty()) coverage_text = coverage_csv(cfg.region, map);

    const Vec3 n = best.frame.n;
    if (format == "json") {
      ordered_json j;
      j["objective"] = obj == planner::Objective::kMaxMinDbm ? "max-min" : "max-mean";
      j["zenith_deg"] = best.zenith_deg;
      j["azimuth_deg"] = best.azimuth_deg;
      j["normal"] = {n.x, n.y, n.z};
      j["objective_dbm"] = jnum(best.objective);
      j["configured_objective_dbm"] = jnum(configured);
      ordered_json levels = ordered_json::array();
      for (double v : best.level_objectives) levels.push_back(jnum(v));
      j["level_objectives_dbm"] = levels;
      return j.dump(2) + "\n";
    }
    std::ostringstream s;
    s << "objective=" << (obj == planner::Objective::kMaxMinDbm ? "max-min" : "max-mean") << "\n"
      << "zenith_deg=" << num(best.zenith_deg) << "\n"
      << "azimuth_deg=" << num(best.azimuth_deg) << "\n"
      << "normal=" << num(n.x) << "," << num(n.y) << "," << num(n.z) << "\n"
      << "objective_dbm=" << num(best.objective) << "\n"
      << "configured_objective_dbm=" << num(configured) << "\n"
      << "levels=" << best.level_objectives.size() << "\n";
    return s.str();
  }
};

// ---- compare

struct CompareCmd {
  std::string measurement;
  std::string output;
  std::string svg;
  std::string format = "text";
  measure::ExperimentConfig bench = measure::ExperimentConfig::table1(45.0);
  double pol_deg = 0;
  CLI::Option* opt_theta = nullptr;
  CLI::Option* opt_pol = nullptr;
  CLI::Option* opt_freq = nullptr;

  void add(CLI::App* app) {
    app->add_option("--measurement", measurement, "CSV with theta_r_deg,p_rx_dbm")->required();
    opt_theta = app->add_option("--theta-t-deg", bench.theta_t_deg, "default: file metadata");
    opt_pol = app->add_option("--pol-deg", pol_deg, "0, 90, 180, 270 or 360; default: file metadata");
    opt_freq = app->add_option("--freq-hz", bench.freq_hz, "default: file metadata, else 3e9");
    app->add_option("--l1-wl", bench.l1_wl)->capture_default_str();
    app->add_option("--l2-wl", bench.l2_wl)->capture_default_str();
    app->add_option("--p-t-dbm", bench.p_t_dbm)->capture_default_str();
    app->add_option("--amp-gain-db", bench.amp_gain_db)->capture_default_str();
    app->add_option("--g-t-dbi", bench.g_t_dbi)->capture_default_str();
    app->add_option("--g-r-dbi", bench.g_r_dbi)->capture_default_str();
    app->add_option("--d-t-m", bench.d_t)->capture_default_str();
    app->add_option("--d-r-m", bench.d_r)->capture_default_str();
    app->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app->add_option("-o,--output", output, "report file (default stdout)");
    app->add_option("--svg", svg, "also write a measured-versus-theory overlay");
  }

  std::string execute(std::string& svg_text) {
    const measure::MeasurementSeries series = measure::load_series(measurement);
    if (!opt_theta->count()) {
      if (!series.meta.theta_t_deg) throw UsageError("no --theta-t-deg and no theta_t_deg metadata");
      bench.theta_t_deg = *series.meta.theta_t_deg;
    }
    if (!opt_pol->count()) {
      if (!series.meta.varphi_t_deg) throw UsageError("no --pol-deg and no varphi_t_deg metadata");
      pol_deg = *series.meta.varphi_t_deg;
    }
    if (!opt_freq->count() && series.meta.freq_hz) bench.freq_hz = *series.meta.freq_hz;

    const measure::PolarizationCase pc = measure::polarization_case_for(pol_deg);
    const std::vector<double> dense = measure::dense_grid();
    const auto curve = measure::theoretical_curve(bench, pc, dense);
    const measure::ComparisonReport report = measure::compare(series, curve);

    if (!svg.empty()) {
      PlotSeries theory{"theory", {}, {}, false};
      for (const auto& p : curve) {
        theory.x.push_back(p.theta_r_deg);
        theory.y.push_back(p.p_r_dbm);
      }
      PlotSeries measured{"measured", {}, {}, true};
      for (const auto& r : series.records) {
        measured.x.push_back(r.theta_r_deg);
        measured.y.push_back(r.p_rx_dbm);
      }
      svg_text = line_plot({theory, measured}, "Measured versus theory", "theta_r (deg)", "P_r (dBm)");
    }
    return format == "json" ? measure::report_json(report) : measure::report_text(report);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bistatic RCS of rectangular metal plates and reflector link planning", "platekit"};
  app.require_subcommand(1, 1);

  RcsCmd rcs_cmd;
  SweepCmd sweep_cmd;
  ValidateCmd validate_cmd;
  CoverageCmd coverage_cmd;
  OptimizeCmd optimize_cmd;
  CompareCmd compare_cmd;
  auto* rcs_app = app.add_subcommand("rcs", "closed-form RCS at one geometry");
  auto* sweep_app = app.add_subcommand("sweep", "RCS and received power along a receiver arc");
  auto* validate_app = app.add_subcommand("validate", "closed form against the physical-optics quadrature");
  auto* coverage_app = app.add_subcommand("coverage", "received power over a target region");
  auto* optimize_app = app.add_subcommand("optimize", "plate orientation search");
  auto* compare_app = app.add_subcommand("compare", "measured series against theory");
  rcs_cmd.add(rcs_app);
  sweep_cmd.add(sweep_app);
  validate_cmd.add(validate_app);
  coverage_cmd.add(coverage_app);
  optimize_cmd.add(optimize_app);
  compare_cmd.add(compare_app);

  std::vector<const char*> argv{"platekit"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rcs_app->parsed()) {
      emit(rcs_cmd.execute(), rcs_cmd.output, out);
    } else if (sweep_app->parsed()) {
      emit(sweep_cmd.execute(), sweep_cmd.output, out);
    } else if (validate_app->parsed()) {
      bool passed = false;
      emit(validate_cmd.execute(passed), validate_cmd.output, out);
      if (!passed) throw ValidationFailure("maximum relative error exceeds --tol");
    } else if (coverage_app->parsed()) {
      std::string svg;
      emit(coverage_cmd.execute(svg), coverage_cmd.output, out);
      if (!coverage_cmd.svg.empty()) emit(svg, coverage_cmd.svg, out);
    } else if (optimize_app->parsed()) {
      std::string cov;
      emit(optimize_cmd.execute(cov), optimize_cmd.output, out);
      if (!optimize_cmd.coverage.empty()) emit(cov, optimize_cmd.coverage, out);
    } else if (compare_app->parsed()) {
      std::string svg;
      emit(compare_cmd.execute(svg), compare_cmd.output, out);
      if (!compare_cmd.svg.empty()) emit(svg, compare_cmd.svg, out);
    }
  } catch (const ValidationFailure& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "platekit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace platekit::cli
