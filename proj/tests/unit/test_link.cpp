#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "platekit/error.hpp"
#include "platekit/format.hpp"
#include "platekit/link.hpp"
#include "platekit/measure.hpp"
#include "platekit/rcs.hpp"
#include "platekit/units.hpp"
#include "support/test_support.hpp"

namespace platekit::link {
namespace {

using platekit::testing::kBenchWavelength;

LinkScenario Bench() { return measure::ExperimentConfig::table1(45).link(); }

TEST(ReceivedPower, TableOneSpecular) {
  EXPECT_NEAR(received_power(Bench(), 39.215), -2.31, 0.05);
}

TEST(ReceivedPower, HandEvaluation) {
  // 0 + 38.861 + 32 + 10 log10(39.215 * lambda^2 / (4 pi)^3 / 64^2)
  const double l2 = kBenchWavelength.meters() * kBenchWavelength.meters();
  const double expected = 38.861 + 32.0 + 10 * std::log10(39.215 * l2 / std::pow(4 * kPi, 3) / (64.0 * 64.0));
  EXPECT_NEAR(received_power(Bench(), 39.215), expected, 1e-12);
}

TEST(ReceivedPower, ZeroSigmaIsNoSignal) {
  const double p = received_power(Bench(), 0.0);
  EXPECT_TRUE(is_no_signal(p));
  EXPECT_EQ(format_number(p), "-inf");
  EXPECT_FALSE(is_no_signal(received_power(Bench(), 1e-30)));
  EXPECT_THROW(received_power(Bench(), -1e-9), DomainError);
}

TEST(ReceivedPower, DistanceDoubling) {
  LinkScenario s = Bench();
  const double base = received_power(s, 3.0);
  s.d_r *= 2;
  EXPECT_NEAR(received_power(s, 3.0) - base, -6.0206, 1e-4);
  EXPECT_NEAR(received_power(s, 3.0) - base, -20 * std::log10(2.0), 1e-12);
}

TEST(ReceivedPower, ReciprocalSymmetry) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  for (int i = 0; i < 1000; ++i) {
    LinkScenario s{u(rng) - 20, u(rng), u(rng), u(rng) - 10, u(rng), u(rng), u(rng) / 100};
    LinkScenario swapped = s;
    std::swap(swapped.g_t_dbi, swapped.g_r_dbi);
    std::swap(swapped.d_t, swapped.d_r);
    const double sigma = u(rng);
    EXPECT_EQ(received_power(s, sigma), received_power(swapped, sigma));
  }
}

TEST(ReceivedPower, StrictlyIncreasingInSigma) {
  double prev = received_power(Bench(), 1e-12);
  for (double sigma = 2e-12; sigma < 1e4; sigma *= 1.7) {
    const double p = received_power(Bench(), sigma);
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(ReceivedPower, RejectsInvalidScenario) {
  LinkScenario s = Bench();
  s.d_t = 0.0;
  EXPECT_THROW(received_power(s, 1.0), DomainError);
  s = Bench();
  s.lambda = -1;
  EXPECT_THROW(received_power(s, 1.0), DomainError);
}

TEST(Units, DbRoundTrip) {
  for (double dbm = -150; dbm <= 60; dbm += 0.37) EXPECT_NEAR(mw_to_dbm(dbm_to_mw(dbm)), dbm, 1e-12);
}

TEST(PowerSweep, ConstantCurve) {
  const std::vector<double> grid{0, 10, 20, 30};
  const auto out = power_sweep(Bench(), grid, [](double) { return 2.0; });
  ASSERT_EQ(out.size(), 4u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].theta_r_deg, grid[i]);
    EXPECT_EQ(out[i].p_r_dbm, received_power(Bench(), 2.0));
  }
}

TEST(PowerSweep, PerpendicularCutPeaksOnSpecularGridPoint) {
  const std::vector<double> grid = measure::standard_grid();
  ASSERT_EQ(grid.size(), 19u);
  const double l = 5 * kBenchWavelength.meters();
  const auto out = power_sweep(Bench(), grid, [&](double deg) {
    return rcs_corollary1_cut(deg2rad(45), deg2rad(deg), l, l, kBenchWavelength);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].p_r_dbm > out[best].p_r_dbm) best = i;
  EXPECT_EQ(out[best].theta_r_deg, 45.0);
}

TEST(PowerSweep, SwappingEndsIsSymmetric) {
  LinkScenario s = Bench();
  s.d_t = 3;
  s.g_t_dbi = 10;
  LinkScenario t = s;
  std::swap(t.d_t, t.d_r);
  std::swap(t.g_t_dbi, t.g_r_dbi);
  const std::vector<double> grid{1, 2, 3};
  const auto f = [](double deg) { return deg * 0.5; };
  const auto a = power_sweep(s, grid, f), b = power_sweep(t, grid, f);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(a[i].p_r_dbm, b[i].p_r_dbm);
}

TEST(PowerSweep, RejectsBadGrids) {
  const auto f = [](double) { return 1.0; };
  EXPECT_THROW(power_sweep(Bench(), std::vector<double>{}, f), DomainError);
  EXPECT_THROW(power_sweep(Bench(), std::vector<double>{0, 5, 5}, f), DomainError);
  EXPECT_THROW(power_sweep(Bench(), std::vector<double>{10, 5}, f), DomainError);
}

}  // namespace
}  // namespace platekit::link
