#include "platekit/measure.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "platekit/error.hpp"
#include "platekit/format.hpp"
#include "platekit/random.hpp"
#include "platekit/rcs.hpp"
#include "platekit/units.hpp"

namespace platekit::measure {

MeasurementSeries MeasurementSeries::make(std::vector<Record> records, SeriesMetadata meta) {
  if (records.size() < kMinRecords) {
    throw DomainError("measurement series needs at least " + std::to_string(kMinRecords) + " records, got " +
                      std::to_string(records.size()));
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (!(records[i].theta_r_deg > records[i - 1].theta_r_deg)) {
      throw DomainError("observation angles must be strictly increasing (record " + std::to_string(i + 1) + ")");
    }
  }
  return {std::move(records), meta};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::size_t line, const char* what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'", line);
  }
  return v;
}

constexpr std::string_view kHeader = "theta_r_deg,p_rx_dbm";

}  // namespace

MeasurementSeries parse_series(std::istream& in) {
  SeriesMetadata meta;
  std::vector<Record> records;
  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) continue;
      const std::string_view body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = trim(body.substr(0, eq));
      const std::string_view value = body.substr(eq + 1);
      if (key == "theta_t_deg") meta.theta_t_deg = parse_double(value, line_no, "theta_t_deg");
      else if (key == "varphi_t_deg") meta.varphi_t_deg = parse_double(value, line_no, "varphi_t_deg");
      else if (key == "freq_hz") meta.freq_hz = parse_double(value, line_no, "freq_hz");
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw ParseError("expected header '" + std::string(kHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected two comma-separated fields", line_no);
    }
    records.push_back({parse_double(line.substr(0, comma), line_no, "theta_r_deg"),
                       parse_double(line.substr(comma + 1), line_no, "p_rx_dbm")});
  }
  if (!header_seen) throw ParseError("empty measurement file (no header)");
  return MeasurementSeries::make(std::move(records), meta);
}

MeasurementSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open measurement file " + path.string());
  return parse_series(in);
}

void write_series(std::ostream& out, const MeasurementSeries& series) {
  if (series.meta.theta_t_deg) out << "# theta_t_deg=" << format_number(*series.meta.theta_t_deg) << '\n';
  if (series.meta.varphi_t_deg) out << "# varphi_t_deg=" << format_number(*series.meta.varphi_t_deg) << '\n';
  if (series.meta.freq_hz) out << "# freq_hz=" << format_number(*series.meta.freq_hz) << '\n';
  out << kHeader << '\n';
  for (const Record& r : series.records) {
    out << format_number(r.theta_r_deg, 17) << ',' << format_number(r.p_rx_dbm, 17) << '\n';
  }
}

PolarizationCase polarization_case_for(double varphi_t_deg) {
  if (varphi_t_deg == 90.0 || varphi_t_deg == 270.0) return PolarizationCase::kCorollary1;
  if (varphi_t_deg == 0.0 || varphi_t_deg == 180.0 || varphi_t_deg == 360.0) return PolarizationCase::kCorollary2;
  throw DomainError("principal-cut formulas need a polarization of 0, 90, 180 or 270 degrees");
}

ExperimentConfig ExperimentConfig::table1(double theta_t_deg) {
  ExperimentConfig c;
  c.theta_t_deg = theta_t_deg;
  return c;
}

link::LinkScenario ExperimentConfig::link() const {
  return {p_t_dbm, g_t_dbi, g_r_dbi, amp_gain_db, d_t, d_r, wavelength_from_frequency(freq_hz)};
}

std::vector<double> standard_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 18; ++i) g.push_back(5.0 * i);
  return g;
}

std::vector<double> dense_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 1800; ++i) g.push_back(i / 20.0);
  return g;
}

double theoretical_rcs(const ExperimentConfig& cfg, PolarizationCase pol_case, double theta_r_deg) {
  const Wavelength wl = Wavelength::from_frequency(cfg.freq_hz);
  const double l1 = cfg.l1_wl * wl.meters(), l2 = cfg.l2_wl * wl.meters();
  const double tt = deg2rad(cfg.theta_t_deg), tr = deg2rad(theta_r_deg);
  return pol_case == PolarizationCase::kCorollary1 ? rcs_corollary1_cut(tt, tr, l1, l2, wl)
                                                   : rcs_corollary2_cut(tt, tr, l1, l2, wl);
}

std::vector<link::PowerSample> theoretical_curve(const ExperimentConfig& cfg, PolarizationCase pol_case,
                                                 std::span<const double> theta_r_grid_deg) {
  return link::power_sweep(cfg.link(), theta_r_grid_deg,
                           [&](double t) { return theoretical_rcs(cfg, pol_case, t); });
}

namespace {

std::size_t argmax_finite(std::span<const double> v) {
  std::size_t best = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) continue;
    if (best == v.size() || v[i] > v[best]) best = i;
  }
  if (best == v.size()) throw DomainError("series has no finite values");
  return best;
}

// Solves the 3x3 system m x = r by Cramer's rule; false when singular.
bool solve3(const std::array<std::array<double, 3>, 3>& m, const std::array<double, 3>& r, std::array<double, 3>& x) {
  auto det = [](const std::array<std::array<double, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const double d = det(m);
  if (d == 0.0 || !std::isfinite(d)) return false;
  for (int c = 0; c < 3; ++c) {
    auto mc = m;
    for (int row = 0; row < 3; ++row) mc[row][c] = r[row];
    x[c] = det(mc) / d;
  }
  return true;
}

}  // namespace

double peak_angle(std::span<const double> theta_deg, std::span<const double> values_db) {
  const std::size_t n = values_db.size();
  const std::size_t peak = argmax_finite(values_db);
  const std::size_t lo = peak >= 2 ? peak - 2 : 0;
  const std::size_t hi = std::min(n - 1, peak + 2);

  // normal equations for y = a x^2 + b x + c with x relative to the peak
  std::array<std::array<double, 3>, 3> m{};
  std::array<double, 3> r{};
  std::size_t used = 0;
  double x_min = 0.0, x_max = 0.0;
  for (std::size_t j = lo; j <= hi; ++j) {
    if (!std::isfinite(values_db[j])) continue;
    const double x = theta_deg[j] - theta_deg[peak];
    const std::array<double, 3> basis{x * x, x, 1.0};
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) m[p][q] += basis[p] * basis[q];
      r[p] += basis[p] * values_db[j];
    }
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    ++used;
  }
  std::array<double, 3> coef{};
  if (used < 3 || !solve3(m, r, coef) || !(coef[0] < 0.0)) return theta_deg[peak];
  const double vertex = std::clamp(-coef[1] / (2.0 * coef[0]), x_min, x_max);
  return theta_deg[peak] + vertex;
}

std::optional<double> half_power_beamwidth(std::span<const double> theta_deg, std::span<const double> values_db) {
  const std::size_t peak = argmax_finite(values_db);
  const double level = values_db[peak] - 3.0;
  auto crossing = [&](std::size_t inner, std::size_t outer) {
    // interpolate in dB between inner (> level) and outer (<= level)
    if (std::isinf(values_db[outer])) return theta_deg[outer];
    const double f = (values_db[inner] - level) / (values_db[inner] - values_db[outer]);
    return theta_deg[inner] + f * (theta_deg[outer] - theta_deg[inner]);
  };
  std::optional<double> left, right;
  for (std::size_t j = peak; j-- > 0;) {
    if (values_db[j] <= level) {
      left = crossing(j + 1, j);
      break;
    }
  }
  for (std::size_t j = peak + 1; j < values_db.size(); ++j) {
    if (values_db[j] <= level) {
      right = crossing(j - 1, j);
      break;
    }
  }
  if (!left || !right) return std::nullopt;
  return *right - *left;
}

std::optional<double> mainlobe_sidelobe_gap(std::span<const double> values_db) {
  const std::size_t peak = argmax_finite(values_db);
  std::size_t lo = peak, hi = peak;
  while (lo > 0 && values_db[lo - 1] <= values_db[lo]) --lo;
  while (hi + 1 < values_db.size() && values_db[hi + 1] <= values_db[hi]) ++hi;
  std::optional<double> side;
  for (std::size_t j = 0; j < values_db.size(); ++j) {
    if (j >= lo && j <= hi) continue;
    if (!side || values_db[j] > *side) side = values_db[j];
  }
  if (!side) return std::nullopt;
  return values_db[peak] - *side;
}

double interpolate_db(std::span<const link::PowerSample> curve, double theta_deg) {
  if (curve.empty()) throw DomainError("curve is empty");
  const double tol = 1e-9;
  if (theta_deg < curve.front().theta_r_deg - tol || theta_deg > curve.back().theta_r_deg + tol) {
    throw DomainError("angle " + format_number(theta_deg) + " lies outside the theoretical curve");
  }
  auto upper = std::upper_bound(curve.begin(), curve.end(), theta_deg,
                                [](double t, const link::PowerSample& s) { return t < s.theta_r_deg; });
  if (upper != curve.begin() && std::abs((upper - 1)->theta_r_deg - theta_deg) <= tol) return (upper - 1)->p_r_dbm;
  if (upper != curve.end() && std::abs(upper->theta_r_deg - theta_deg) <= tol) return upper->p_r_dbm;
  if (upper == curve.begin()) return curve.front().p_r_dbm;
  if (upper == curve.end()) return curve.back().p_r_dbm;
  const auto lower = upper - 1;
  if (std::isinf(lower->p_r_dbm) || std::isinf(upper->p_r_dbm)) return -std::numeric_limits<double>::infinity();
  const double f = (theta_deg - lower->theta_r_deg) / (upper->theta_r_deg - lower->theta_r_deg);
  return lower->p_r_dbm + f * (upper->p_r_dbm - lower->p_r_dbm);
}

std::optional<double> main_lobe_shift(std::span<const double> theta_deg, std::span<const double> measured_db,
                                      std::span<const link::PowerSample> curve) {
  std::vector<double> theory(theta_deg.size());
  for (std::size_t i = 0; i < theta_deg.size(); ++i) theory[i] = interpolate_db(curve, theta_deg[i]);
  const double top = theory[argmax_finite(theory)];
  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < theta_deg.size(); ++i) {
    if (std::isfinite(measured_db[i]) && std::isfinite(theory[i]) && theory[i] >= top - kLobeWindowDb) {
      window.push_back(i);
    }
  }
  if (window.size() < 3) return std::nullopt;

  const double lo = curve.front().theta_r_deg, hi = curve.back().theta_r_deg;
  // residual sum of squares after removing the best constant offset
  auto misfit = [&](double shift) {
    double sum = 0.0, sq = 0.0;
    std::vector<double> d;
    d.reserve(window.size());
    for (std::size_t i : window) {
      const double t = theta_deg[i] - shift;
      if (t < lo || t > hi) return std::numeric_limits<double>::infinity();
      d.push_back(measured_db[i] - interpolate_db(curve, t));
      sum += d.back();
    }
    const double mean = sum / static_cast<double>(d.size());
    for (double x : d) sq += (x - mean) * (x - mean);
    return std::isnan(sq) ? std::numeric_limits<double>::infinity() : sq;
  };

  // scan outward from zero so ties resolve to the smallest shift
  const int steps = static_cast<int>(std::lround(kMaxLobeShiftDeg / kLobeShiftStepDeg));
  double best_shift = 0.0, best = misfit(0.0);
  for (int k = 1; k <= steps; ++k) {
    for (int sign : {1, -1}) {
      const double shift = sign * k * kLobeShiftStepDeg;
      const double m = misfit(shift);
      if (m < best) {
        best = m;
        best_shift = shift;
      }
    }
  }
  if (!std::isfinite(best)) return std::nullopt;
  return best_shift;
}

ComparisonReport compare(const MeasurementSeries& series, std::span<const link::PowerSample> curve) {
  const std::size_t n = series.records.size();
  std::vector<double> theta(n), measured(n), theory(n);
  for (std::size_t i = 0; i < n; ++i) {
    theta[i] = series.records[i].theta_r_deg;
    measured[i] = series.records[i].p_rx_dbm;
    theory[i] = interpolate_db(curve, theta[i]);
  }

  ComparisonReport rep;
  std::vector<double> diffs;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isfinite(measured[i]) && std::isfinite(theory[i])) diffs.push_back(measured[i] - theory[i]);
  }
  if (diffs.empty()) throw DomainError("no comparable points between measurement and theory");
  double sum = 0.0;
  for (double d : diffs) sum += d;
  rep.offset_db = sum / static_cast<double>(diffs.size());
  double sq = 0.0;
  for (double d : diffs) sq += (d - rep.offset_db) * (d - rep.offset_db);
  rep.rmse_db = std::sqrt(sq / static_cast<double>(diffs.size()));
  rep.points = diffs.size();

  std::vector<double> curve_theta, curve_db;
  for (const auto& s : curve) {
    curve_theta.push_back(s.theta_r_deg);
    curve_db.push_back(s.p_r_dbm);
  }
  rep.theory_peak_deg = peak_angle(curve_theta, curve_db);
  if (const auto shift = main_lobe_shift(theta, measured, curve)) {
    rep.measured_peak_deg = rep.theory_peak_deg + *shift;
    rep.peak_angle_error_deg = std::abs(*shift);
  } else {
    rep.measured_peak_deg = peak_angle(theta, measured);
    rep.peak_angle_error_deg = std::abs(rep.measured_peak_deg - peak_angle(theta, theory));
  }

  // both widths read off the measurement grid, so grid effects cancel
  rep.measured_hpbw_deg = half_power_beamwidth(theta, measured);
  rep.theory_hpbw_deg = half_power_beamwidth(theta, theory);
  if (rep.measured_hpbw_deg && rep.theory_hpbw_deg) {
    rep.hpbw_error_deg = std::abs(*rep.measured_hpbw_deg - *rep.theory_hpbw_deg);
  }
  rep.mainlobe_sidelobe_gap_db = mainlobe_sidelobe_gap(measured);
  return rep;
}

namespace {

std::string opt_text(const std::optional<double>& v) { return v ? format_number(*v) : "unavailable"; }

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::string report_text(const ComparisonReport& r) {
  std::ostringstream os;
  os << "offset_db=" << format_number(r.offset_db) << '\n'
     << "peak_angle_error_deg=" << format_number(r.peak_angle_error_deg) << '\n'
     << "hpbw_error_deg=" << opt_text(r.hpbw_error_deg) << '\n'
     << "rmse_db=" << format_number(r.rmse_db) << '\n'
     << "mainlobe_sidelobe_gap_db=" << opt_text(r.mainlobe_sidelobe_gap_db) << '\n'
     << "measured_peak_deg=" << format_number(r.measured_peak_deg) << '\n'
     << "theory_peak_deg=" << format_number(r.theory_peak_deg) << '\n'
     << "measured_hpbw_deg=" << opt_text(r.measured_hpbw_deg) << '\n'
     << "theory_hpbw_deg=" << opt_text(r.theory_hpbw_deg) << '\n'
     << "points=" << r.points << '\n';
  return os.str();
}

std::string report_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["offset_db"] = r.offset_db;
  j["peak_angle_error_deg"] = r.peak_angle_error_deg;
  j["hpbw_error_deg"] = opt_json(r.hpbw_error_deg);
  j["rmse_db"] = r.rmse_db;
  j["mainlobe_sidelobe_gap_db"] = opt_json(r.mainlobe_sidelobe_gap_db);
  j["measured_peak_deg"] = r.measured_peak_deg;
  j["theory_peak_deg"] = r.theory_peak_deg;
  j["measured_hpbw_deg"] = opt_json(r.measured_hpbw_deg);
  j["theory_hpbw_deg"] = opt_json(r.theory_hpbw_deg);
  j["points"] = r.points;
  return j.dump(2) + "\n";
}

MeasurementSeries synthesize_series(std::span<const link::PowerSample> curve, double offset_db, double noise_db,
                                    std::uint64_t seed, SeriesMetadata meta) {
  std::mt19937_64 rng(seed);
  std::vector<Record> records;
  records.reserve(curve.size());
  for (const auto& s : curve) {
    const double noise = noise_db > 0.0 ? noise_db * standard_normal(rng) : 0.0;
    records.push_back({s.theta_r_deg, s.p_r_dbm + offset_db + noise});
  }
  return MeasurementSeries::make(std::move(records), meta);
}

}  // namespace platekit::measure
