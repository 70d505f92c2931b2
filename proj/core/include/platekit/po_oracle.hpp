#pragma once

#include <array>
#include <complex>
#include <vector>

#include "platekit/geometry.hpp"
#include "platekit/rcs.hpp"
#include "platekit/units.hpp"

// Brute-force physical-optics route to the plate RCS. Nothing in here calls
// the closed-form factors of rcs.hpp; the two paths are meant to be compared.

namespace platekit::po {

using Complex = std::complex<double>;
using CVec3 = std::array<Complex, 3>;

struct IncidentWave {
  UnitVec3 a_t;
  UnitVec3 a_e;
  UnitVec3 a_h;
  double h0 = 1.0;  // A/m
  double eta = kFreeSpaceImpedance;
  Wavelength wavelength;

  /// Validates the triad (a_t = a_E x a_H within 1e-12) and magnitudes.
  static IncidentWave make(const PolarizationTriad& triad, Wavelength wl, double h0 = 1.0,
                           double eta = kFreeSpaceImpedance);
};

struct QuadratureSpec {
  int nodes_per_edge;

  /// ceil(6 max(L1, L2) / lambda) + 16 nodes: at least three per oscillation
  /// of the aperture phase.
  static QuadratureSpec for_plate(const PlateGeometry& plate, Wavelength wl);
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n. Throws for n < 1.
GaussLegendreRule gauss_legendre(int n);

struct FarFieldSample {
  Complex e_theta;
  Complex e_phi;
  double e_rho = 0.0;  // radial component vanishes in the far field
  double d_r = 0.0;
  /// d_r >= 2 (L1^2 + L2^2) / lambda.
  bool far_field = true;
};

/// Induced surface current 2 H0 (n x a_H) exp(-j k a_t . r') at r' on the
/// plate. Throws DomainError for back-side illumination.
CVec3 induced_current(const IncidentWave& wave, const UnitVec3& n, const Vec3& r_prime);

/// Radiation integrals of the induced current evaluated with a tensor
/// Gauss-Legendre rule over the plate surface.
FarFieldSample po_far_field(const PlateGeometry& plate, const IncidentWave& wave, const UnitVec3& a_r, double d_r,
                            const QuadratureSpec& q);

/// 4 pi d^2 |E|^2 / |E_inc|^2 from po_far_field. d_r <= 0 selects a distance
/// well inside the far field.
double po_rcs(const PlateGeometry& plate, const IncidentWave& wave, const UnitVec3& a_r, const QuadratureSpec& q,
              double d_r = 0.0);

/// Quadrature of the aperture phase integral over the plate,
/// iint exp(j k (a_r - a_t) . r') ds.
Complex aperture_integral(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_r, Wavelength wl,
                          const QuadratureSpec& q);

}  // namespace platekit::po
