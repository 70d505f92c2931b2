#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "platekit/link.hpp"

namespace platekit::measure {

struct Record {
  double theta_r_deg;
  double p_rx_dbm;
};

struct SeriesMetadata {
  std::optional<double> theta_t_deg;
  std::optional<double> varphi_t_deg;
  std::optional<double> freq_hz;
};

/// Received power against observation angle. At least five records with
/// strictly increasing angles.
struct MeasurementSeries {
  std::vector<Record> records;
  SeriesMetadata meta;

  /// Throws DomainError when the invariants do not hold.
  static MeasurementSeries make(std::vector<Record> records, SeriesMetadata meta = {});
};

inline constexpr std::size_t kMinRecords = 5;

/// CSV with header `theta_r_deg,p_rx_dbm`. Lines starting with '#' are
/// comments; `# key=value` comments before the header carry metadata
/// (theta_t_deg, varphi_t_deg, freq_hz). Throws ParseError with the line
/// number, DomainError for ordering problems.
MeasurementSeries parse_series(std::istream& in);
/// parse_series on a file; IoError if it cannot be opened.
MeasurementSeries load_series(const std::filesystem::path& path);
void write_series(std::ostream& out, const MeasurementSeries& series);

enum class PolarizationCase {
  kCorollary1,  // E perpendicular to the plane of incidence (90 / 270 deg)
  kCorollary2,  // E in the plane of incidence (0 / 180 deg)
};

/// Maps a polarization angle in degrees onto its case; DomainError unless it
/// is one of 0, 90, 180, 270, 360.
PolarizationCase polarization_case_for(double varphi_t_deg);

/// Bistatic bench geometry: plate in the x-y plane, transmitter at azimuth
/// 270 deg, receiver moved along the phi_r = 90 deg arc.
struct ExperimentConfig {
  double freq_hz = 3e9;
  double l1_wl = 5.0;  // edge lengths in wavelengths
  double l2_wl = 5.0;
  double theta_t_deg = 45.0;
  double p_t_dbm = 0.0;
  double amp_gain_db = 38.861;
  double g_t_dbi = 16.0;
  double g_r_dbi = 16.0;
  double d_t = 8.0;
  double d_r = 8.0;

  /// The 3 GHz, 5x5 wavelength, 8 m bench with 16 dBi horns.
  static ExperimentConfig table1(double theta_t_deg);

  link::LinkScenario link() const;
};

/// 0, 5, ..., 90 degrees.
std::vector<double> standard_grid();
/// 0, 0.05, ..., 90 degrees; contains every standard_grid angle exactly.
std::vector<double> dense_grid();

/// Closed-form RCS on the principal cut for the chosen case.
double theoretical_rcs(const ExperimentConfig& cfg, PolarizationCase pol_case, double theta_r_deg);

/// Received power predicted on `theta_r_grid_deg`.
std::vector<link::PowerSample> theoretical_curve(const ExperimentConfig& cfg, PolarizationCase pol_case,
                                                 std::span<const double> theta_r_grid_deg);

struct ComparisonReport {
  double offset_db = 0.0;            // mean(measured - theory)
  double peak_angle_error_deg = 0.0;
  std::optional<double> hpbw_error_deg;  // empty if either main lobe hits the grid edge
  double rmse_db = 0.0;              // after offset removal
  std::optional<double> mainlobe_sidelobe_gap_db;  // measured; empty without a sidelobe

  double measured_peak_deg = 0.0;
  double theory_peak_deg = 0.0;
  std::optional<double> measured_hpbw_deg;
  std::optional<double> theory_hpbw_deg;
  std::size_t points = 0;
};

/// Peak location: least-squares parabola through the grid maximum and up to
/// two neighbours on each side, clamped to the fitted span. Falls back to the
/// grid angle when the fit is not concave.
double peak_angle(std::span<const double> theta_deg, std::span<const double> values_db);

/// Width between the -3 dB crossings around the grid maximum, each found by
/// linear interpolation in dB. Empty when a crossing lies beyond the grid.
std::optional<double> half_power_beamwidth(std::span<const double> theta_deg, std::span<const double> values_db);

/// Main lobe = grid maximum extended downhill on both sides. Returns peak
/// minus the highest remaining sample, or empty if nothing remains.
std::optional<double> mainlobe_sidelobe_gap(std::span<const double> values_db);

/// Linear interpolation in dB of `curve` at `theta_deg`. DomainError outside
/// the curve's angular span.
double interpolate_db(std::span<const link::PowerSample> curve, double theta_deg);

inline constexpr double kLobeWindowDb = 15.0;
inline constexpr double kMaxLobeShiftDeg = 10.0;
inline constexpr double kLobeShiftStepDeg = 0.01;

/// Angular shift of `curve` that best fits the measured points lying within
/// kLobeWindowDb of the theoretical maximum, in the least-squares sense with
/// a free dB offset. Searched on a kLobeShiftStepDeg grid up to
/// +-kMaxLobeShiftDeg. Empty when fewer than three points qualify.
std::optional<double> main_lobe_shift(std::span<const double> theta_deg, std::span<const double> measured_db,
                                      std::span<const link::PowerSample> curve);

/// Aligns the measured series with a theoretical curve (resampled onto the
/// measurement grid when the grids differ) and reports the offset-invariant
/// metrics. The theoretical peak comes from `curve` itself, so pass a dense
/// curve; the measured peak is that angle plus main_lobe_shift.
ComparisonReport compare(const MeasurementSeries& series, std::span<const link::PowerSample> curve);

/// `key=value` lines; unavailable values print as "unavailable".
std::string report_text(const ComparisonReport& report);
std::string report_json(const ComparisonReport& report);

/// Curve shifted by `offset_db` with i.i.d. Gaussian noise of `noise_db`
/// standard deviation. Deterministic for a given seed on every platform.
MeasurementSeries synthesize_series(std::span<const link::PowerSample> curve, double offset_db, double noise_db,
                                    std::uint64_t seed, SeriesMetadata meta = {});

}  // namespace platekit::measure
