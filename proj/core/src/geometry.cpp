#include "platekit/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "platekit/error.hpp"
#include "platekit/units.hpp"

namespace platekit {

UnitVec3 UnitVec3::normalize(const Vec3& v) {
  const double len = norm(v);
  if (!std::isfinite(len) || len == 0.0) throw DomainError("cannot normalize a zero or non-finite vector");
  // Leave vectors that are already unit to rounding untouched, so components
  // built from sines and cosines keep their exact values.
  if (std::abs(len - 1.0) <= 4 * std::numeric_limits<double>::epsilon()) return UnitVec3{v};
  return UnitVec3{v / len};
}

UnitVec3 UnitVec3::from_unit(const Vec3& v, double tol) {
  const double len = norm(v);
  if (!std::isfinite(len) || std::abs(len - 1.0) > tol) {
    throw DomainError("vector is not of unit length (norm " + std::to_string(len) + ")");
  }
  return UnitVec3{v / len};
}

void check_front_hemisphere(const SphericalAngles& a) {
  if (!(a.theta >= 0.0 && a.theta <= kPi / 2)) {
    throw DomainError("zenith angle must lie in [0, 90] degrees, got " + std::to_string(rad2deg(a.theta)));
  }
  if (!(a.phi >= 0.0 && a.phi < 2 * kPi)) {
    throw DomainError("azimuth angle must lie in [0, 360) degrees, got " + std::to_string(rad2deg(a.phi)));
  }
}

PolarizationAngle PolarizationAngle::radians(double value) {
  if (!(value >= 0.0 && value <= 2 * kPi)) {
    throw DomainError("polarization angle must lie in (0, 360] degrees, got " + std::to_string(rad2deg(value)));
  }
  return PolarizationAngle{value == 0.0 ? 2 * kPi : value};
}

PolarizationAngle PolarizationAngle::degrees(double value) {
  if (value == 360.0) return PolarizationAngle{2 * kPi};
  return radians(deg2rad(value));
}

namespace {

// Components of the unit vector at (theta, phi) without range checks.
Vec3 direction_of(double theta, double phi) {
  const SinCos t = sincos_exact(theta), p = sincos_exact(phi);
  return {t.s * p.c, t.s * p.s, t.c};
}

}  // namespace

UnitVec3 spherical_to_unit(const SphericalAngles& angles) {
  check_front_hemisphere(angles);
  return UnitVec3::normalize(direction_of(angles.theta, angles.phi));
}

SphericalAngles direction_angles(const UnitVec3& dir) {
  const double rho = std::hypot(dir.x(), dir.y());
  const double theta = std::atan2(rho, dir.z());
  double phi = rho == 0.0 ? 0.0 : std::atan2(dir.y(), dir.x());
  if (phi < 0.0) phi += 2 * kPi;
  if (phi >= 2 * kPi) phi = 0.0;
  return {theta, phi};
}

UnitVec3 unit_direction(double theta, double phi) { return UnitVec3::normalize(direction_of(theta, phi)); }

UnitVec3 incident_direction(const SphericalAngles& angles) { return -spherical_to_unit(angles); }

UnitVec3 observation_direction(const SphericalAngles& angles) { return spherical_to_unit(angles); }

SphericalBasis spherical_basis(double theta, double phi) {
  const SinCos t = sincos_exact(theta), p = sincos_exact(phi);
  const double ct = t.c, st = t.s, cp = p.c, sp = p.s;
  return {UnitVec3::normalize({ct * cp, ct * sp, -st}), UnitVec3::normalize({-sp, cp, 0.0})};
}

SphericalBasis spherical_basis(const UnitVec3& dir) {
  const SphericalAngles a = direction_angles(dir);
  return spherical_basis(a.theta, a.phi);
}

namespace {

// The incidence angles describe the direction from the plate toward the
// transmitter, i.e. -a_t.
PolarizationTriad triad_from_angles(double theta, double phi, PolarizationAngle pol) {
  const SphericalBasis b = spherical_basis(theta, phi);
  const SinCos v = sincos_exact(pol.value());
  const double cv = v.c, sv = v.s;
  const UnitVec3 a_t = UnitVec3::normalize(-direction_of(theta, phi));
  const UnitVec3 a_e = UnitVec3::normalize(-cv * b.theta_hat.vec() - sv * b.phi_hat.vec());
  const UnitVec3 a_h = UnitVec3::normalize(cross(a_t, a_e));
  return {a_e, a_h, a_t};
}

}  // namespace

PolarizationTriad polarization_triad(const SphericalAngles& incidence, PolarizationAngle pol) {
  check_front_hemisphere(incidence);
  return triad_from_angles(incidence.theta, incidence.phi, pol);
}

PolarizationTriad polarization_triad(const UnitVec3& a_t, PolarizationAngle pol) {
  const SphericalAngles toward_tx = direction_angles(-a_t);
  return triad_from_angles(toward_tx.theta, toward_tx.phi, pol);
}

PlateFrame plate_frame(const UnitVec3& n, const UnitVec3& l1) {
  if (std::abs(dot(n, l1)) > kFrameTolerance) {
    throw DomainError("plate normal and edge l1 are not orthogonal (n.l1 = " + std::to_string(dot(n, l1)) + ")");
  }
  return {n, l1, UnitVec3::normalize(cross(n, l1))};
}

Rotation Rotation::identity() { return Rotation{Matrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

Rotation Rotation::from_matrix(const Matrix& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m[k][i] * m[k][j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-9) throw DomainError("matrix is not orthogonal");
    }
  }
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (std::abs(det - 1.0) > 1e-9) throw DomainError("matrix is a reflection, not a rotation");
  return Rotation{m};
}

Rotation Rotation::about_axis(const UnitVec3& axis, double angle) {
  // Rodrigues
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  const double x = axis.x(), y = axis.y(), z = axis.z();
  return Rotation{Matrix{{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
                          {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
                          {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}}};
}

Rotation Rotation::euler_zyz(double alpha, double beta, double gamma) {
  return about_axis(UnitVec3::ez(), alpha) * about_axis(UnitVec3::ey(), beta) * about_axis(UnitVec3::ez(), gamma);
}

Rotation Rotation::transpose() const {
  Matrix t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m_[j][i];
  return Rotation{t};
}

Vec3 Rotation::apply(const Vec3& v) const {
  return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z, m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
          m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
}

UnitVec3 Rotation::apply(const UnitVec3& v) const { return UnitVec3::normalize(apply(v.vec())); }

PlateFrame Rotation::apply(const PlateFrame& f) const { return {apply(f.n), apply(f.l1), apply(f.l2)}; }

Rotation operator*(const Rotation& a, const Rotation& b) {
  Rotation::Matrix m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += a.m_[i][k] * b.m_[k][j];
  return Rotation{m};
}

}  // namespace platekit
