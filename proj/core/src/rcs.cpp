#include "platekit/rcs.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "platekit/error.hpp"
#include "platekit/units.hpp"

namespace platekit {

Wavelength Wavelength::meters(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("wavelength must be positive");
  return Wavelength{lambda};
}

Wavelength Wavelength::from_frequency(double freq_hz) {
  if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) throw DomainError("frequency must be positive");
  return Wavelength{wavelength_from_frequency(freq_hz)};
}

double Wavelength::wavenumber() const { return 2 * kPi / lambda_; }

PlateGeometry PlateGeometry::make(double l1_len, double l2_len, const PlateFrame& frame) {
  if (!(l1_len > 0.0) || !(l2_len > 0.0)) throw DomainError("plate edge lengths must be positive");
  if (std::abs(dot(frame.n, frame.l1)) > kFrameTolerance || std::abs(dot(frame.n, frame.l2)) > kFrameTolerance ||
      std::abs(dot(frame.l1, frame.l2)) > kFrameTolerance || norm(cross(frame.l1, frame.l2) - frame.n.vec()) > kFrameTolerance) {
    throw DomainError("plate frame (l1, l2, n) is not a right-handed orthonormal triad");
  }
  return {l1_len, l2_len, frame};
}

PlateGeometry rotated(const Rotation& r, const PlateGeometry& plate) {
  return {plate.l1_len, plate.l2_len, r.apply(plate.frame)};
}

double sinc(double x) {
  if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double sigma_max(const PlateGeometry& plate, Wavelength wl) {
  const double area = plate.l1_len * plate.l2_len;
  const double lambda = wl.meters();
  return 4 * kPi * area * area / (lambda * lambda);
}

double f_js(const UnitVec3& n, const UnitVec3& a_h, const UnitVec3& a_r) {
  return norm2(cross(cross(n, a_h), a_r));
}

double f_af(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_r, Wavelength wl) {
  const Vec3 deflection = a_r.vec() - a_t.vec();
  const double k = wl.wavenumber();
  const double s1 = sinc(0.5 * k * plate.l1_len * dot(deflection, plate.frame.l1));
  const double s2 = sinc(0.5 * k * plate.l2_len * dot(deflection, plate.frame.l2));
  return s1 * s1 * s2 * s2;
}

RcsBreakdown rcs(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_h, const UnitVec3& a_r,
                 Wavelength wl) {
  if (std::abs(dot(a_t, a_h)) > kFrameTolerance) {
    throw DomainError("magnetic field direction is not transverse to the propagation direction");
  }
  RcsBreakdown out;
  out.sigma_max = sigma_max(plate, wl);
  out.f_js = f_js(plate.frame.n, a_h, a_r);
  out.f_af = f_af(plate, a_t, a_r, wl);
  out.sigma = out.sigma_max * out.f_js * out.f_af;
  out.front_side_valid = dot(plate.frame.n, a_t) < 0.0 && dot(plate.frame.n, a_r) > 0.0;
  return out;
}

UnitVec3 specular_direction(const UnitVec3& n, const UnitVec3& a_t) {
  const double c = dot(n, a_t);
  if (!(c < 0.0)) throw DomainError("plate is illuminated from the back side (n.a_t >= 0)");
  return UnitVec3::normalize(a_t.vec() - 2 * c * n.vec());
}

double rcs_large_plate_limit(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_h,
                             const UnitVec3& a_r, Wavelength wl) {
  const UnitVec3 mirror = specular_direction(plate.frame.n, a_t);
  const double angle = std::atan2(norm(cross(mirror, a_r)), dot(mirror, a_r));
  if (angle > kSpecularTolerance) return 0.0;
  return sigma_max(plate, wl) * f_js(plate.frame.n, a_h, mirror);
}

namespace {

}  // namespace

double rcs_xy_plate(const SphericalAngles& incidence, PolarizationAngle pol, const SphericalAngles& observation,
                    double l1_len, double l2_len, Wavelength wl) {
  check_front_hemisphere(incidence);
  check_front_hemisphere(observation);
  const double tt = incidence.theta, tr = observation.theta;
  const SinCos pt = sincos_exact(incidence.phi);
  const SinCos pr = sincos_exact(observation.phi);
  const SinCos v = sincos_exact(pol.value());
  const double ctt = std::cos(tt), ctr = std::cos(tr);
  // sin(phi_r - phi_t) and cos(phi_t - phi_r) by the addition formulas
  const double s_rt = pr.s * pt.c - pr.c * pt.s;
  const double c_rt = pt.c * pr.c + pt.s * pr.s;

  const double u = v.s * ctt * s_rt + v.c * c_rt;
  const double w = -v.c * s_rt + v.s * ctt * c_rt;
  const double polarization = ctr * ctr * u * u + w * w;

  const double half_k = 0.5 * wl.wavenumber();
  const double s1 = sinc(half_k * l1_len * (std::sin(tr) * pr.c + std::sin(tt) * pt.c));
  const double s2 = sinc(half_k * l2_len * (std::sin(tr) * pr.s + std::sin(tt) * pt.s));
  return sigma_max(PlateGeometry::make(l1_len, l2_len), wl) * polarization * s1 * s1 * s2 * s2;
}

namespace {

void check_corollary_angles(double theta_t, double theta_r, double phi_r) {
  check_front_hemisphere({theta_t, 0.0});
  check_front_hemisphere({theta_r, phi_r});
}

// Shared array factor of both corollaries (phi_t = 270 deg).
double corollary_array_factor(double theta_t, double theta_r, double phi_r, double l1_len, double l2_len,
                              Wavelength wl) {
  const double half_k = 0.5 * wl.wavenumber();
  const double s1 = sinc(half_k * l1_len * (std::sin(theta_r) * std::cos(phi_r)));
  const double s2 = sinc(half_k * l2_len * (std::sin(theta_r) * std::sin(phi_r) - std::sin(theta_t)));
  return s1 * s1 * s2 * s2;
}

double cut_array_factor(double theta_t, double theta_r, double l2_len, Wavelength wl) {
  const double s = sinc(0.5 * wl.wavenumber() * l2_len * (std::sin(theta_r) - std::sin(theta_t)));
  return s * s;
}

}  // namespace

double rcs_corollary1(double theta_t, double theta_r, double phi_r, double l1_len, double l2_len, Wavelength wl) {
  check_corollary_angles(theta_t, theta_r, phi_r);
  const double a = std::cos(theta_t) * std::cos(theta_r) * std::cos(phi_r);
  const double b = std::cos(theta_t) * std::sin(phi_r);
  return sigma_max(PlateGeometry::make(l1_len, l2_len), wl) * (a * a + b * b) *
         corollary_array_factor(theta_t, theta_r, phi_r, l1_len, l2_len, wl);
}

double rcs_corollary1_cut(double theta_t, double theta_r, double l1_len, double l2_len, Wavelength wl) {
  check_corollary_angles(theta_t, theta_r, kPi / 2);
  const double ct = std::cos(theta_t);
  return sigma_max(PlateGeometry::make(l1_len, l2_len), wl) * ct * ct * cut_array_factor(theta_t, theta_r, l2_len, wl);
}

double rcs_corollary2(double theta_t, double theta_r, double phi_r, double l1_len, double l2_len, Wavelength wl) {
  check_corollary_angles(theta_t, theta_r, phi_r);
  const double a = std::cos(theta_r) * std::sin(phi_r);
  const double b = std::cos(phi_r);
  return sigma_max(PlateGeometry::make(l1_len, l2_len), wl) * (a * a + b * b) *
         corollary_array_factor(theta_t, theta_r, phi_r, l1_len, l2_len, wl);
}

double rcs_corollary2_cut(double theta_t, double theta_r, double l1_len, double l2_len, Wavelength wl) {
  check_corollary_angles(theta_t, theta_r, kPi / 2);
  const double cr = std::cos(theta_r);
  return sigma_max(PlateGeometry::make(l1_len, l2_len), wl) * cr * cr * cut_array_factor(theta_t, theta_r, l2_len, wl);
}

}  // namespace platekit
