#pragma once

#include "platekit/geometry.hpp"

namespace platekit {

/// Free-space wavelength in meters. k = 2 pi / lambda.
class Wavelength {
public:
  static Wavelength meters(double lambda);
  static Wavelength from_frequency(double freq_hz);

  double meters() const { return lambda_; }
  double wavenumber() const;

private:
  explicit Wavelength(double l) : lambda_(l) {}
  double lambda_;
};

/// Rectangular perfectly conducting plate of size L1 x L2, centered at the
/// origin, with edges along frame.l1 / frame.l2 and normal frame.n.
struct PlateGeometry {
  double l1_len;
  double l2_len;
  PlateFrame frame;

  /// Throws DomainError on non-positive lengths.
  static PlateGeometry make(double l1_len, double l2_len, const PlateFrame& frame = {});
};

PlateGeometry rotated(const Rotation& r, const PlateGeometry& plate);

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// sigma = sigma_max * f_js * f_af.
struct RcsBreakdown {
  double sigma = 0.0;      // m^2
  double sigma_max = 0.0;  // m^2
  double f_js = 0.0;
  double f_af = 0.0;
  /// n.a_t < 0 and n.a_r > 0; physical optics is only meaningful then.
  bool front_side_valid = false;
};

/// 4 pi L1^2 L2^2 / lambda^2.
double sigma_max(const PlateGeometry& plate, Wavelength wl);

/// Polarization factor |(n x a_H) x a_r|^2.
double f_js(const UnitVec3& n, const UnitVec3& a_h, const UnitVec3& a_r);

/// Aperture array factor: product of sinc^2 over the deflection vector
/// projected on each edge.
double f_af(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_r, Wavelength wl);

/// Closed-form bistatic RCS for an incident plane wave (a_t, a_H) observed
/// along a_r. Back-side geometries are evaluated but flagged invalid.
/// Throws DomainError if a_H is not transverse to a_t.
RcsBreakdown rcs(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_h, const UnitVec3& a_r,
                 Wavelength wl);

/// Mirror direction a_t - 2 (n.a_t) n. Requires front-side illumination.
UnitVec3 specular_direction(const UnitVec3& n, const UnitVec3& a_t);

/// Angular tolerance used to decide "a_r is the specular direction".
inline constexpr double kSpecularTolerance = 1e-9;

/// Electrically-large limit: all energy goes to the specular direction.
double rcs_large_plate_limit(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_h,
                             const UnitVec3& a_r, Wavelength wl);

/// Angle-parameterized RCS of a plate lying in the x-y plane with l1 = e_x,
/// l2 = e_y. Angles in radians, front hemisphere only.
double rcs_xy_plate(const SphericalAngles& incidence, PolarizationAngle pol, const SphericalAngles& observation,
                    double l1_len, double l2_len, Wavelength wl);

/// Incidence from phi_t = 270 deg with E perpendicular to the plane of
/// incidence (polarization 90 or 270 deg). Full observation hemisphere.
double rcs_corollary1(double theta_t, double theta_r, double phi_r, double l1_len, double l2_len, Wavelength wl);
/// Principal cut phi_r = 90 deg of rcs_corollary1; independent of L1.
double rcs_corollary1_cut(double theta_t, double theta_r, double l1_len, double l2_len, Wavelength wl);

/// Incidence from phi_t = 270 deg with E in the plane of incidence
/// (polarization 0 or 180 deg).
double rcs_corollary2(double theta_t, double theta_r, double phi_r, double l1_len, double l2_len, Wavelength wl);
double rcs_corollary2_cut(double theta_t, double theta_r, double l1_len, double l2_len, Wavelength wl);

}  // namespace platekit
