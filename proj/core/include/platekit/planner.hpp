#pragma once

#include <cstddef>
#include <vector>

#include "platekit/geometry.hpp"
#include "platekit/rcs.hpp"

namespace platekit::planner {

/// Link parameters that do not depend on where the receiver is.
struct LinkBudget {
  double p_t_dbm = 0.0;
  double g_t_dbi = 0.0;
  double g_r_dbi = 0.0;
  double amp_gain_db = 0.0;
};

/// Transmitter, plate placement and wave parameters of a deployment. Plate
/// geometry is expressed relative to plate_pos.
struct Scene {
  Vec3 tx_pos;
  Vec3 plate_pos;
  PlateGeometry plate;
  PolarizationAngle pol;
  Wavelength wavelength;
  LinkBudget link;

  /// Throws DomainError if tx_pos == plate_pos or the plate faces away
  /// from the transmitter.
  static Scene make(const Vec3& tx_pos, const Vec3& plate_pos, const PlateGeometry& plate, PolarizationAngle pol,
                    Wavelength wl, const LinkBudget& link);

  /// a_t = unit(plate_pos - tx_pos).
  UnitVec3 incident_direction() const;
  double tx_distance() const;
};

/// Receiver positions laid out as rows x cols, row-major.
struct TargetRegion {
  std::vector<Vec3> points;
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// corner + i/(nu-1) * u_edge + j/(nv-1) * v_edge for i < nu (columns),
  /// j < nv (rows). A count of 1 places the single sample at the corner.
  static TargetRegion grid(const Vec3& corner, const Vec3& u_edge, const Vec3& v_edge, std::size_t nu, std::size_t nv);
  /// Single-row region. Throws DomainError when empty.
  static TargetRegion from_points(std::vector<Vec3> points);
};

/// Frame for normal `n` using the horizontal-edge convention: l1 = unit(n x e_z)
/// unless n is vertical, in which case l1 = e_x.
PlateFrame frame_from_normal(const UnitVec3& n);

/// Frame whose normal has zenith/azimuth (radians, zenith in [0, pi]).
PlateFrame frame_from_normal_angles(double zenith, double azimuth);

/// Plate orientation that makes `target_pos` the specular direction for a
/// wave from `tx_pos`. Throws DomainError for coincident positions or when
/// the target lies straight behind the plate along the incident ray.
PlateFrame orient_for_target(const Vec3& tx_pos, const Vec3& plate_pos, const Vec3& target_pos);

struct CoverageCell {
  bool shadow = false;  // receiver behind the plate, or plate facing away from the TX
  double sigma = 0.0;   // m^2, 0 for shadow cells
  double p_r_dbm = 0.0; // reflected-path power; -inf for shadow / zero RCS
};

struct CoverageMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<CoverageCell> cells;  // row-major

  const CoverageCell& at(std::size_t row, std::size_t col) const { return cells[row * cols + col]; }
};

/// Reflected-path received power at every region point.
CoverageMap coverage_map(const Scene& scene, const TargetRegion& region);

enum class Objective {
  kMaxMinDbm,   // worst-case received power
  kMaxMeanMw,   // mean linear power, reported in dBm
};

/// Objective value in dB units. Shadow cells count as zero power.
double evaluate_objective(const CoverageMap& map, Objective objective);

struct SearchOptions {
  double coarse_step_deg = 5.0;
  int refinement_factor = 5;
  int min_refinements = 3;
  int max_refinements = 6;
  double halt_improvement_db = 0.01;
  int starts = 32;  // best coarse cells refined independently
};

struct OrientationResult {
  PlateFrame frame;
  double zenith_deg = 0.0;   // of the plate normal
  double azimuth_deg = 0.0;
  double objective = 0.0;    // dBm
  std::vector<double> level_objectives;  // incumbent after each level
};

/// Coarse-to-fine grid search over the normal direction: the `starts` best
/// coarse cells are each refined, and the best refined result wins.
/// Orientations that do not face the transmitter are skipped. Throws DomainError on an empty region.
OrientationResult optimize_orientation(const Scene& scene, const TargetRegion& region, Objective objective,
                                       const SearchOptions& options = {});

/// Exhaustive search on a uniform zenith/azimuth grid of `step_deg`.
OrientationResult brute_force_orientation(const Scene& scene, const TargetRegion& region, Objective objective,
                                          double step_deg);

}  // namespace platekit::planner
