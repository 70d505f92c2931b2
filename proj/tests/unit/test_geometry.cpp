#include <gtest/gtest.h>

#include <random>

#include "platekit/error.hpp"
#include "platekit/geometry.hpp"
#include "platekit/random.hpp"
#include "platekit/units.hpp"
#include "support/test_support.hpp"

namespace platekit {
namespace {

using testing::ExpectVecNear;

constexpr double kTol = 1e-5;  // examples are quoted to 5 digits

TEST(SphericalToUnit, Examples) {
  ExpectVecNear(spherical_to_unit({0, 0}), {0, 0, 1}, 1e-15);
  ExpectVecNear(spherical_to_unit({deg2rad(90), 0}), {1, 0, 0}, 1e-15);
  ExpectVecNear(spherical_to_unit({deg2rad(45), deg2rad(90)}), {0, 0.70711, 0.70711}, kTol);
}

TEST(SphericalToUnit, RejectsOutOfRange) {
  EXPECT_THROW(spherical_to_unit({deg2rad(95), 0}), DomainError);
  EXPECT_THROW(spherical_to_unit({-0.1, 0}), DomainError);
  EXPECT_THROW(spherical_to_unit({0.1, 2 * kPi}), DomainError);
  EXPECT_THROW(spherical_to_unit({0.1, -0.1}), DomainError);
}

TEST(SphericalToUnit, ZenithIgnoresAzimuth) {
  for (double phi : {0.0, 1.0, 3.0, 6.0}) ExpectVecNear(spherical_to_unit({0, phi}), {0, 0, 1}, 1e-15);
}

TEST(SphericalToUnit, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double theta = 1e-6 + (kPi / 2 - 2e-6) * uniform01(rng);
    const double phi = 2 * kPi * uniform01(rng);
    const SphericalAngles back = direction_angles(spherical_to_unit({theta, phi}));
    EXPECT_NEAR(back.theta, theta, 1e-10);
    EXPECT_NEAR(std::remainder(back.phi - phi, 2 * kPi), 0.0, 1e-10 / std::sin(theta) + 1e-12);
  }
}

TEST(IncidentDirection, Examples) {
  ExpectVecNear(incident_direction({0, 1.234}), {0, 0, -1}, 1e-15);
  ExpectVecNear(incident_direction({deg2rad(45), deg2rad(270)}), {0, 0.70711, -0.70711}, kTol);
  const UnitVec3 a = incident_direction({deg2rad(25), deg2rad(270)});
  ExpectVecNear(a, {0, 0.42262, -0.90631}, kTol);
  EXPECT_NEAR(norm(a), 1.0, 1e-15);
}

TEST(ObservationDirection, Examples) {
  ExpectVecNear(observation_direction({0, 0}), {0, 0, 1}, 1e-15);
  ExpectVecNear(observation_direction({deg2rad(90), deg2rad(90)}), {0, 1, 0}, 1e-15);
  ExpectVecNear(observation_direction({deg2rad(65), deg2rad(90)}), {0, 0.90631, 0.42262}, kTol);
}

TEST(PolarizationTriad, Examples) {
  const auto t1 = polarization_triad({deg2rad(45), deg2rad(270)}, PolarizationAngle::degrees(90));
  ExpectVecNear(t1.a_h, {0, 0.70711, 0.70711}, kTol);
  ExpectVecNear(t1.a_h, cross(t1.a_t, t1.a_e), 1e-15);
  EXPECT_NEAR(dot(t1.a_h, t1.a_t), 0.0, 1e-15);

  const auto t2 = polarization_triad({0, 0}, PolarizationAngle::degrees(90));
  ExpectVecNear(t2.a_h, {-1, 0, 0}, 1e-15);
  EXPECT_NEAR(dot(t2.a_e, t2.a_h), 0.0, 1e-15);
}

TEST(PolarizationTriad, MatchesClosedFormMagneticField) {
  // a_H written out component-wise for the angle parameterization.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double tt = kPi / 2 * uniform01(rng), pt = 2 * kPi * uniform01(rng);
    const double v = 2 * kPi * (1 - uniform01(rng));
    const auto t = polarization_triad({tt, pt}, PolarizationAngle::radians(v));
    const Vec3 expected{-std::sin(v) * std::cos(tt) * std::cos(pt) - std::cos(v) * std::sin(pt),
                        -std::sin(v) * std::cos(tt) * std::sin(pt) + std::cos(v) * std::cos(pt),
                        std::sin(v) * std::sin(tt)};
    ExpectVecNear(t.a_h, expected, 1e-14);
  }
}

TEST(PolarizationTriad, OrthonormalForRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const SphericalAngles inc{kPi / 2 * uniform01(rng), 2 * kPi * uniform01(rng)};
    const auto t = polarization_triad(inc, PolarizationAngle::radians(2 * kPi * (1 - uniform01(rng))));
    EXPECT_NEAR(norm(t.a_e), 1.0, 1e-12);
    EXPECT_NEAR(norm(t.a_h), 1.0, 1e-12);
    EXPECT_NEAR(dot(t.a_e, t.a_h), 0.0, 1e-12);
    EXPECT_NEAR(dot(t.a_t, t.a_e), 0.0, 1e-12);
    EXPECT_NEAR(dot(t.a_t, t.a_h), 0.0, 1e-12);
    ExpectVecNear(cross(t.a_e, t.a_h), t.a_t, 1e-12);
  }
}

TEST(SphericalBasis, ThetaHatInZenithPlanePhiHatHorizontal) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double theta = kPi / 2 * uniform01(rng), phi = 2 * kPi * uniform01(rng);
    const UnitVec3 a_t = incident_direction({theta, phi});
    const SphericalBasis b = spherical_basis(theta, phi);
    EXPECT_NEAR(dot(b.theta_hat, a_t), 0.0, 1e-14);
    // theta_hat lies in span(e_z, a_t): its triple product with both vanishes
    EXPECT_NEAR(dot(b.theta_hat, cross(UnitVec3::ez(), a_t)), 0.0, 1e-14);
    EXPECT_NEAR(dot(b.phi_hat, UnitVec3::ez()), 0.0, 1e-15);
    EXPECT_NEAR(dot(b.phi_hat, a_t), 0.0, 1e-14);
  }
}

TEST(PolarizationAngle, RangeHandling) {
  EXPECT_DOUBLE_EQ(PolarizationAngle::degrees(0).value(), 2 * kPi);
  EXPECT_DOUBLE_EQ(PolarizationAngle::degrees(360).value(), 2 * kPi);
  EXPECT_THROW(PolarizationAngle::degrees(-1), DomainError);
  EXPECT_THROW(PolarizationAngle::degrees(361), DomainError);
}

TEST(PlateFrame, Examples) {
  ExpectVecNear(plate_frame(UnitVec3::ez(), UnitVec3::ex()).l2, {0, 1, 0}, 0);
  ExpectVecNear(plate_frame(UnitVec3::ey(), UnitVec3::ez()).l2, {1, 0, 0}, 0);
  const auto f = plate_frame(UnitVec3::from_unit({0, -0.70711, 0.70711}, 1e-5), UnitVec3::ex());
  ExpectVecNear(f.l2, {0, 0.70711, 0.70711}, kTol);
}

TEST(PlateFrame, RejectsNonOrthogonal) {
  EXPECT_THROW(plate_frame(UnitVec3::ez(), UnitVec3::normalize({1, 0, 1e-6})), DomainError);
}

TEST(UnitVec3, Factories) {
  EXPECT_THROW(UnitVec3::normalize({0, 0, 0}), DomainError);
  EXPECT_THROW(UnitVec3::from_unit({1, 1, 0}), DomainError);
  EXPECT_NEAR(norm(UnitVec3::normalize({3, 4, 12})), 1.0, 1e-15);
}

TEST(Rotation, Examples) {
  const Vec3 v{0.3, -0.2, 0.9};
  ExpectVecNear(Rotation::identity().apply(v), v, 0);
  ExpectVecNear(Rotation::about_axis(UnitVec3::ez(), kPi / 2).apply(UnitVec3::ex()), {0, 1, 0}, 1e-15);
}

TEST(Rotation, CompositionMatchesSequentialApplication) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const UnitVec3 ax1 = UnitVec3::normalize({uniform01(rng) - 0.5, uniform01(rng) - 0.5, uniform01(rng) - 0.5});
    const UnitVec3 ax2 = UnitVec3::normalize({uniform01(rng) - 0.5, uniform01(rng) - 0.5, uniform01(rng) - 0.5});
    const Rotation r1 = Rotation::about_axis(ax1, 6 * uniform01(rng));
    const Rotation r2 = Rotation::about_axis(ax2, 6 * uniform01(rng));
    const Vec3 v{uniform01(rng), uniform01(rng), uniform01(rng)};
    ExpectVecNear((r2 * r1).apply(v), r2.apply(r1.apply(v)), 1e-14);
  }
}

TEST(Rotation, FromMatrixValidates) {
  EXPECT_NO_THROW(Rotation::from_matrix(Rotation::euler_zyz(0.3, 0.4, 0.5).matrix()));
  EXPECT_THROW(Rotation::from_matrix({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}), DomainError);
  EXPECT_THROW(Rotation::from_matrix({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), DomainError);
}

TEST(Rotation, RotateSceneRotatesEveryObject) {
  const Rotation r = Rotation::about_axis(UnitVec3::ez(), kPi / 2);
  const auto [v, f] = rotate_scene(r, UnitVec3::ex(), PlateFrame{});
  ExpectVecNear(v, {0, 1, 0}, 1e-15);
  ExpectVecNear(f.l1, {0, 1, 0}, 1e-15);
  ExpectVecNear(f.l2, {-1, 0, 0}, 1e-15);
  ExpectVecNear(f.n, {0, 0, 1}, 1e-15);
}

TEST(Rotation, EulerZyzMapsCanonicalFrame) {
  // beta = 90 deg tips the normal onto +x
  const PlateFrame f = Rotation::euler_zyz(0, kPi / 2, 0).apply(PlateFrame{});
  ExpectVecNear(f.n, {1, 0, 0}, 1e-15);
  ExpectVecNear(f.l1, {0, 0, -1}, 1e-15);
}

}  // namespace
}  // namespace platekit
