#pragma once

#include <array>
#include <cmath>
#include <tuple>

namespace platekit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr double norm2(const Vec3& a) { return dot(a, a); }

/// Direction vector with unit norm. Only constructible through the checked
/// factories, so every instance satisfies |v| = 1 to rounding.
class UnitVec3 {
public:
  /// Normalizes any nonzero finite vector.
  static UnitVec3 normalize(const Vec3& v);
  /// Accepts a vector already of unit length within `tol`, then renormalizes.
  static UnitVec3 from_unit(const Vec3& v, double tol = 1e-9);

  static constexpr UnitVec3 ex() { return UnitVec3{Vec3{1, 0, 0}}; }
  static constexpr UnitVec3 ey() { return UnitVec3{Vec3{0, 1, 0}}; }
  static constexpr UnitVec3 ez() { return UnitVec3{Vec3{0, 0, 1}}; }

  constexpr const Vec3& vec() const { return v_; }
  constexpr operator const Vec3&() const { return v_; }  // NOLINT(google-explicit-constructor)
  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }

  constexpr UnitVec3 operator-() const { return UnitVec3{-v_}; }

private:
  constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Zenith/azimuth pair in radians. The angle-parameterized operations require
/// theta in [0, pi/2] and phi in [0, 2 pi); `direction_angles` may return any
/// theta in [0, pi].
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Throws DomainError unless theta in [0, pi/2] and phi in [0, 2 pi).
void check_front_hemisphere(const SphericalAngles& a);

/// Polarization angle of the incident E field, radians in (0, 2 pi].
/// An input of exactly 0 is folded to 2 pi (same physical polarization).
class PolarizationAngle {
public:
  static PolarizationAngle radians(double value);
  static PolarizationAngle degrees(double value);

  double value() const { return value_; }

private:
  explicit PolarizationAngle(double v) : value_(v) {}
  double value_;
};

UnitVec3 spherical_to_unit(const SphericalAngles& angles);
/// Same direction for any (theta, phi), without the hemisphere check.
UnitVec3 unit_direction(double theta, double phi);

/// Inverse of spherical_to_unit over the whole sphere. phi is 0 on the z axis.
SphericalAngles direction_angles(const UnitVec3& dir);

/// a_t, pointing from the transmitter toward the plate.
UnitVec3 incident_direction(const SphericalAngles& angles);
UnitVec3 observation_direction(const SphericalAngles& angles);

struct SphericalBasis {
  UnitVec3 theta_hat;
  UnitVec3 phi_hat;
};

/// Unit vectors along increasing theta and phi at (theta, phi). No range
/// restriction; at the poles phi selects the orientation of the pair.
SphericalBasis spherical_basis(double theta, double phi);
SphericalBasis spherical_basis(const UnitVec3& dir);

struct PolarizationTriad {
  UnitVec3 a_e;
  UnitVec3 a_h;
  UnitVec3 a_t;
};

/// Field triad for a wave arriving from (theta_t, phi_t) with polarization
/// angle `pol`. a_E = -cos(pol) a_t_theta - sin(pol) a_t_phi, a_H = a_t x a_E.
PolarizationTriad polarization_triad(const SphericalAngles& incidence, PolarizationAngle pol);

/// Same construction for an arbitrary propagation direction a_t (no
/// hemisphere restriction). The reference plane is spanned by e_z and a_t.
PolarizationTriad polarization_triad(const UnitVec3& a_t, PolarizationAngle pol);

/// Right-handed plate triad (l1, l2, n) with l2 = n x l1.
struct PlateFrame {
  UnitVec3 n = UnitVec3::ez();
  UnitVec3 l1 = UnitVec3::ex();
  UnitVec3 l2 = UnitVec3::ey();
};

inline constexpr double kFrameTolerance = 1e-9;

/// Completes (n, l1) to a plate frame. Throws DomainError if |n . l1| > 1e-9.
PlateFrame plate_frame(const UnitVec3& n, const UnitVec3& l1);

/// Proper rotation (orthogonal, det +1), row-major.
class Rotation {
public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  static Rotation identity();
  /// Throws DomainError unless R^T R = I and det R = 1 within 1e-9.
  static Rotation from_matrix(const Matrix& m);
  static Rotation about_axis(const UnitVec3& axis, double angle);
  /// R = Rz(alpha) Ry(beta) Rz(gamma), intrinsic z-y-z convention.
  static Rotation euler_zyz(double alpha, double beta, double gamma);

  const Matrix& matrix() const { return m_; }
  Rotation transpose() const;

  Vec3 apply(const Vec3& v) const;
  UnitVec3 apply(const UnitVec3& v) const;
  PlateFrame apply(const PlateFrame& f) const;

  /// (A * B).apply(v) == A.apply(B.apply(v)).
  friend Rotation operator*(const Rotation& a, const Rotation& b);

private:
  explicit Rotation(const Matrix& m) : m_(m) {}
  Matrix m_;
};

/// Rotates each argument with `r`. Any type with a Rotation::apply or
/// rotated(const Rotation&, T) overload participates.
template <typename... Ts>
auto rotate_scene(const Rotation& r, const Ts&... objects) {
  return std::make_tuple(rotated(r, objects)...);
}

inline Vec3 rotated(const Rotation& r, const Vec3& v) { return r.apply(v); }
inline UnitVec3 rotated(const Rotation& r, const UnitVec3& v) { return r.apply(v); }
inline PlateFrame rotated(const Rotation& r, const PlateFrame& f) { return r.apply(f); }

}  // namespace platekit
