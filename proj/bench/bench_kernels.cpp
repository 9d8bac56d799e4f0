// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "propmod/frob.hpp"
#include "propmod/gen2.hpp"
#include "propmod/genp.hpp"
#include "propmod/lines.hpp"
#include "propmod/oracle.hpp"
#include "propmod/region.hpp"

using namespace propmod;

namespace {

// A wide strip: u = (30, 1) spreads the region over many rows.
const ModularInequality kWide({7, -3}, {1, -30}, 97);
const ModularInequality kSpatial({5, 2, 1}, {3, 1, -4}, 4);

std::vector<Point> wide_candidates() {
  return enumerate_region(kWide, strip_region(strip_geometry(kWide)));
}

void BM_RegionParallel(benchmark::State& state) {
  auto region = strip_region(strip_geometry(kWide));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_region(kWide, region));
}

void BM_RegionSerial(benchmark::State& state) {
  auto region = strip_region(strip_geometry(kWide));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_region_serial(kWide, region));
}

void BM_BruteMembersParallel(benchmark::State& state) {
  auto w = oracle::Window::cube(3, 60);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_members(kSpatial, w));
}

void BM_BruteMembersSerial(benchmark::State& state) {
  auto w = oracle::Window::cube(3, 60);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_members_serial(kSpatial, w));
}

void BM_MinimalizeLayered(benchmark::State& state) {
  auto cands = wide_candidates();
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(cands, kWide));
}

void BM_MinimalizeSerial(benchmark::State& state) {
  auto cands = wide_candidates();
  for (auto _ : state) benchmark::DoNotOptimize(minimalize_serial(cands, kWide));
}

void BM_Frobenius(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_vectors(kWide));
}

void BM_GeneralMethodSpatial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_gens_np(kSpatial));
}

}  // namespace

BENCHMARK(BM_RegionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteMembersParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteMembersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalizeLayered)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Frobenius)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralMethodSpatial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
