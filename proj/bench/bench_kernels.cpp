// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "pfaff/kernels.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/quartic.hpp"

using namespace pfaff;

namespace {

kernels::ModPoly cubic_mod(std::uint64_t p) {
  return kernels::ModPoly::from_poly(Poly::parse("x0^3 + x1^3 - x1*x2^2 + 2*x0*x1^2", Field::rationals()), p);
}

std::vector<kernels::ModPoly> quartic_system(std::uint64_t p) {
  std::vector<kernels::ModPoly> sys;
  for (const auto& r : quartic::residual_system()) sys.push_back(kernels::ModPoly::from_mpoly(r.equation, p));
  return sys;
}

constexpr std::array<std::size_t, 9> kOuter{0, 1, 2, 3, 4, 5, 6, 7, 8};
constexpr std::array<std::size_t, 3> kInner{9, 10, 11};

template <bool Parallel>
void BM_CurvePoints(benchmark::State& state) {
  const auto f = cubic_mod(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto pts = Parallel ? kernels::curve_points(f) : kernels::serial::curve_points(f);
    benchmark::DoNotOptimize(pts);
  }
}

template <bool Parallel>
void BM_SingularPoints(benchmark::State& state) {
  const auto f = cubic_mod(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto pts = Parallel ? kernels::singular_points(f) : kernels::serial::singular_points(f);
    benchmark::DoNotOptimize(pts);
  }
}

template <bool Parallel>
void BM_QuarticSearch(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto sys = quartic_system(p);
  for (auto _ : state) {
    auto hits = Parallel ? kernels::search_attempts(sys, kOuter, kInner, 1, 0, 16)
                         : kernels::serial::search_attempts(sys, kOuter, kInner, 1, 0, 16);
    benchmark::DoNotOptimize(hits);
  }
}

}  // namespace

BENCHMARK(BM_CurvePoints<false>)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurvePoints<true>)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularPoints<false>)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularPoints<true>)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuarticSearch<false>)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuarticSearch<true>)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
