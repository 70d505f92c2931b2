#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "platekit/geometry.hpp"
#include "platekit/random.hpp"
#include "platekit/rcs.hpp"

namespace platekit::po {

/// One random bistatic configuration with front-side incidence and
/// observation.
struct Scenario {
  PlateGeometry plate;
  PolarizationTriad triad;
  UnitVec3 a_r;
  Wavelength wavelength;
};

/// Uniformly distributed direction on the unit sphere.
UnitVec3 random_direction(std::mt19937_64& rng);

/// Draws a scenario: frequency in [1, 30] GHz, edges in
/// [min_len_wl, max_len_wl] wavelengths, random plate orientation, random
/// linear polarization, a_t on the lit side and a_r in front of the plate.
Scenario random_scenario(std::mt19937_64& rng, double min_len_wl = 0.5, double max_len_wl = 10.0);

struct TrialResult {
  double closed_form;  // m^2
  double oracle;       // m^2
  double rel_error;
  int nodes_per_edge;
};

struct ValidationReport {
  std::vector<TrialResult> trials;
  double max_rel_error = 0.0;
  std::size_t worst_trial = 0;
};

/// |a - b| / |b|; 0 when both vanish.
double relative_error(double value, double reference);

/// Compares the closed-form RCS against the physical-optics quadrature on
/// `trials` seeded scenarios. Scenarios are drawn sequentially, evaluated in
/// parallel, and reported in draw order.
ValidationReport run_validation(std::size_t trials, std::uint64_t seed,
                                std::optional<int> nodes_per_edge = std::nullopt);

}  // namespace platekit::po
