#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "coulomb2d/amplitude.hpp"
#include "coulomb2d/kinematics.hpp"
#include "coulomb2d/phase_shift.hpp"
#include "coulomb2d/radial.hpp"
#include "coulomb2d/specfun.hpp"

namespace {

using namespace coulomb2d;
using Complex = std::complex<double>;

constexpr double PI = 3.14159265358979323846;

Kinematics kin_default() { return derive_kinematics(ParticleSpec{}, 1.25); }

void BM_LogGamma(benchmark::State& state) {
    Complex z(0.5 + 0.01 * state.range(0), -0.3);
    for (auto _ : state) benchmark::DoNotOptimize(specfun::log_gamma(z));
}
BENCHMARK(BM_LogGamma)->Arg(1)->Arg(100)->Arg(10000);

void BM_KummerPhi(benchmark::State& state) {
    // |z| = 2 rho selects the regime: double Taylor, dd Taylor, asymptotic
    double rho = 0.5 * state.range(0);
    Complex a(0.5, -0.02), z(0.0, -2.0 * rho);
    for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_phi(a, 2.0, z));
}
BENCHMARK(BM_KummerPhi)->Arg(5)->Arg(20)->Arg(100)->Arg(5000);

void BM_GaussFUnit(benchmark::State& state) {
    Complex a2(0.5, -0.2), b1(1.5, 0.2);
    Complex w = std::polar(1.0, PI / state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(specfun::gauss_f_unit(a2, b1, w));
}
BENCHMARK(BM_GaussFUnit)->Arg(2)->Arg(16)->Arg(64);

void BM_SMatrixExact(benchmark::State& state) {
    Kinematics kin = kin_default();
    AngularMomentum j(int(2 * state.range(0) + 1));
    for (auto _ : state) benchmark::DoNotOptimize(s_matrix_exact(j, kin));
}
BENCHMARK(BM_SMatrixExact)->Arg(0)->Arg(100);

void BM_SMatrixTable(benchmark::State& state) {
    Kinematics kin = kin_default();
    int two_j_max = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_s_matrix_table(two_j_max, kin));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SMatrixTable)->Arg(257)->Arg(2049)->Arg(16385)->Complexity();

void BM_SeriesAmplitude(benchmark::State& state) {
    Kinematics kin = kin_default();
    AngleGrid grid({PI}, PI / 64.0);
    SummationOptions opts;
    opts.max_two_j = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_series_exact(grid, kin, opts));
}
BENCHMARK(BM_SeriesAmplitude)->Arg(2001)->Arg(24001);

void BM_ClosedAmplitude(benchmark::State& state) {
    Kinematics kin = kin_default();
    AngleGrid grid = AngleGrid::uniform(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f_closed(grid, kin));
}
BENCHMARK(BM_ClosedAmplitude)->Arg(256);

void BM_OdeIntegrate(benchmark::State& state) {
    Kinematics kin = kin_default();
    std::vector<double> grid;
    for (int i = 0; i < 512; ++i) grid.push_back(100.0 + 100.0 * i / 511.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ode_integrate(AngularMomentum(1), kin, {1e-4, 200.0}, grid));
}
BENCHMARK(BM_OdeIntegrate);

void BM_ExtractPhase(benchmark::State& state) {
    Kinematics kin = kin_default();
    std::vector<double> grid;
    for (int i = 0; i < 512; ++i) grid.push_back(100.0 + 100.0 * i / 511.0);
    RadialSolution sol = kummer_radial(AngularMomentum(1), kin, grid);
    for (auto _ : state) benchmark::DoNotOptimize(extract_phase(sol));
}
BENCHMARK(BM_ExtractPhase);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
