#include "platekit/validation.hpp"

#include <cmath>

#include "platekit/parallel.hpp"
#include "platekit/po_oracle.hpp"
#include "platekit/units.hpp"

namespace platekit::po {

UnitVec3 random_direction(std::mt19937_64& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * kPi * uniform01(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVec3::normalize({rho * std::cos(phi), rho * std::sin(phi), z});
}

namespace {

UnitVec3 random_half_space(std::mt19937_64& rng, const UnitVec3& n, bool along_normal) {
  for (;;) {
    const UnitVec3 d = random_direction(rng);
    const double c = dot(d, n);
    if (c == 0.0) continue;
    return (c > 0.0) == along_normal ? d : -d;
  }
}

}  // namespace

Scenario random_scenario(std::mt19937_64& rng, double min_len_wl, double max_len_wl) {
  const Wavelength wl = Wavelength::from_frequency(1e9 + 29e9 * uniform01(rng));
  const double l1 = (min_len_wl + (max_len_wl - min_len_wl) * uniform01(rng)) * wl.meters();
  const double l2 = (min_len_wl + (max_len_wl - min_len_wl) * uniform01(rng)) * wl.meters();

  const UnitVec3 n = random_direction(rng);
  UnitVec3 edge = n;
  for (;;) {
    const Vec3 c = cross(n, random_direction(rng));
    if (norm(c) > 1e-3) {
      edge = UnitVec3::normalize(c);
      break;
    }
  }
  const PlateGeometry plate = PlateGeometry::make(l1, l2, plate_frame(n, edge));

  const UnitVec3 a_t = random_half_space(rng, n, false);
  const double pol = 2.0 * kPi * (1.0 - uniform01(rng));  // (0, 2 pi]
  const PolarizationTriad triad = polarization_triad(a_t, PolarizationAngle::radians(pol));
  const UnitVec3 a_r = random_half_space(rng, n, true);
  return {plate, triad, a_r, wl};
}

double relative_error(double value, double reference) {
  if (value == reference) return 0.0;
  return std::abs(value - reference) / std::abs(reference);
}

ValidationReport run_validation(std::size_t trials, std::uint64_t seed, std::optional<int> nodes_per_edge) {
  std::mt19937_64 rng(seed);
  std::vector<Scenario> scenarios;
  scenarios.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) scenarios.push_back(random_scenario(rng));

  ValidationReport report;
  report.trials.resize(trials);
  parallel_for(trials, [&](std::size_t i) {
    const Scenario& s = scenarios[i];
    const QuadratureSpec q = nodes_per_edge ? QuadratureSpec{*nodes_per_edge} : QuadratureSpec::for_plate(s.plate, s.wavelength);
    const double closed = rcs(s.plate, s.triad.a_t, s.triad.a_h, s.a_r, s.wavelength).sigma;
    const double oracle = po_rcs(s.plate, IncidentWave::make(s.triad, s.wavelength), s.a_r, q);
    report.trials[i] = {closed, oracle, relative_error(oracle, closed), q.nodes_per_edge};
  });
  for (std::size_t i = 0; i < trials; ++i) {
    if (report.trials[i].rel_error > report.max_rel_error || i == 0) {
      report.max_rel_error = report.trials[i].rel_error;
      report.worst_trial = i;
    }
  }
  return report;
}

}  // namespace platekit::po
