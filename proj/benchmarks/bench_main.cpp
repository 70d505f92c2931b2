#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "platekit/measure.hpp"
#include "platekit/planner.hpp"
#include "platekit/po_oracle.hpp"
#include "platekit/rcs.hpp"
#include "platekit/units.hpp"
#include "platekit/validation.hpp"

namespace {

using namespace platekit;

const Wavelength kWl = Wavelength::from_frequency(3e9);

void BM_ClosedFormRcs(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<po::Scenario> s;
  for (int i = 0; i < 256; ++i) s.push_back(po::random_scenario(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const po::Scenario& c = s[i++ & 255];
    benchmark::DoNotOptimize(rcs(c.plate, c.triad.a_t, c.triad.a_h, c.a_r, c.wavelength).sigma);
  }
}
BENCHMARK(BM_ClosedFormRcs);

void BM_XyPlateRcs(benchmark::State& state) {
  const double l = 5 * kWl.meters();
  double tr = 0;
  for (auto _ : state) {
    tr = tr > 1.5 ? 0 : tr + 1e-3;
    benchmark::DoNotOptimize(
        rcs_xy_plate({0.7, deg2rad(270)}, PolarizationAngle::degrees(90), {tr, deg2rad(90)}, l, l, kWl));
  }
}
BENCHMARK(BM_XyPlateRcs);

// Oracle cost grows with the square of the quadrature order.
void BM_PoRcs(benchmark::State& state) {
  const double edge_wl = static_cast<double>(state.range(0));
  const PlateGeometry plate = PlateGeometry::make(edge_wl * kWl.meters(), edge_wl * kWl.meters());
  const PolarizationTriad t = polarization_triad(SphericalAngles{0.6, 4.0}, PolarizationAngle::degrees(30));
  const po::IncidentWave wave = po::IncidentWave::make(t, kWl);
  const UnitVec3 a_r = observation_direction({0.9, 1.2});
  const po::QuadratureSpec q = po::QuadratureSpec::for_plate(plate, kWl);
  for (auto _ : state) benchmark::DoNotOptimize(po::po_rcs(plate, wave, a_r, q));
  state.counters["nodes_per_edge"] = q.nodes_per_edge;
}
BENCHMARK(BM_PoRcs)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Validation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(po::run_validation(static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_Validation)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CoverageMap(benchmark::State& state) {
  const double l = 5 * kWl.meters();
  const planner::Scene scene = planner::Scene::make({-4, -3, 5}, {0, 0, 0}, PlateGeometry::make(l, l),
                                                    PolarizationAngle::degrees(90), kWl, {0, 16, 16, 38.861});
  const auto n = static_cast<std::size_t>(state.range(0));
  const planner::TargetRegion region = planner::TargetRegion::grid({2, -2, 4}, {4, 0, 0}, {0, 4, 0}, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(planner::coverage_map(scene, region));
}
BENCHMARK(BM_CoverageMap)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_OptimizeOrientation(benchmark::State& state) {
  const double l = 5 * kWl.meters();
  const planner::Scene scene = planner::Scene::make({-4, -3, 5}, {0, 0, 0}, PlateGeometry::make(l, l),
                                                    PolarizationAngle::degrees(90), kWl, {0, 16, 16, 38.861});
  const planner::TargetRegion region = planner::TargetRegion::grid({2, -2, 4}, {4, 0, 0}, {0, 4, 0}, 3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(planner::optimize_orientation(scene, region, planner::Objective::kMaxMinDbm));
}
BENCHMARK(BM_OptimizeOrientation)->Unit(benchmark::kMillisecond);

void BM_CompareDense(benchmark::State& state) {
  const auto cfg = measure::ExperimentConfig::table1(45);
  const auto grid = measure::standard_grid();
  const auto dense = measure::dense_grid();
  const auto curve = measure::theoretical_curve(cfg, measure::PolarizationCase::kCorollary1, grid);
  const auto dense_curve = measure::theoretical_curve(cfg, measure::PolarizationCase::kCorollary1, dense);
  const auto series = measure::synthesize_series(curve, 2.0, 1.0, 7);
  for (auto _ : state) benchmark::DoNotOptimize(measure::compare(series, dense_curve));
}
BENCHMARK(BM_CompareDense)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
