#include <benchmark/benchmark.h>

#include <random>

#include "graphdiffuse/born.hpp"
#include "graphdiffuse/cayley.hpp"
#include "graphdiffuse/closed_form.hpp"
#include "graphdiffuse/families.hpp"
#include "graphdiffuse/random.hpp"

using namespace graphdiffuse;

static void BM_GreensDirectPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DiffusionOperator h0 = assemble_h0(path_graph(n), 1.0, BoundaryCondition::robin(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(greens_direct(h0).entries().data());
  state.SetComplexityN(n);
}
BENCHMARK(BM_GreensDirectPath)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_ClosedFormPath(benchmark::State& state) {
  const FamilySpec spec{"path", static_cast<int>(state.range(0)), 1.0, 0.5, false};
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_greens(spec).entries().data());
}
BENCHMARK(BM_ClosedFormPath)->RangeMultiplier(2)->Range(32, 512);

static void BM_BornSolve(benchmark::State& state) {
  const FamilySpec spec{"path", 62, 1.0, 0.5, false};
  const GreensMatrix g0 = closed_form_greens(spec);
  std::mt19937_64 engine(42);
  const AbsorptionProfile eta = AbsorptionProfile::uniform(sample_without_replacement(engine, 62, 16), 0.2);
  const Eigen::VectorXd f = Eigen::VectorXd::Unit(64, 62);
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(born_solve(g0, eta, 1.0, terms, f).data());
}
BENCHMARK(BM_BornSolve)->Arg(10)->Arg(40);

static void BM_LatticeQuadrature(benchmark::State& state) {
  const double alpha0 = state.range(0) == 0 ? 1e-3 : 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(lattice2d_green_quadrature(alpha0, 5, 3).value);
}
BENCHMARK(BM_LatticeQuadrature)->Arg(0)->Arg(1);

static void BM_GreenNonabelian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGroup sn = FiniteGroup::symmetric(n);
  const GeneratorSet s = GeneratorSet::adjacent_transpositions(sn);
  const RepresentationSet irreps = young_orthogonal_irreps(n);
  for (auto _ : state) benchmark::DoNotOptimize(green_nonabelian(sn, s, irreps, 0.1).entries().data());
}
BENCHMARK(BM_GreenNonabelian)->Arg(4)->Arg(5);
BENCHMARK_MAIN();
