#include <benchmark/benchmark.h>

#include "geim/geim.hpp"
#include "geim/pde.hpp"

namespace {

using namespace geim;

Grid bench_grid() { return make_grid(65, 33, 0, 2, 0, 1, 0.75); }

std::vector<Field> bench_training(const Grid& g, int per_axis) {
  const ParamRanges ranges{{-1, 1, per_axis}, {-1, 1, per_axis}, {0.5, 1.5, per_axis}};
  const SnapshotSet set = generate_snapshots(ranges, g, omega1_mask(g));
  std::vector<Field> training;
  const SubdomainMask o2c = omega2_closed_mask(g);
  for (const Field& f : set.fields) training.push_back(restrict_to(f, o2c));
  return training;
}

Dictionary bench_dictionary(const Grid& g) {
  const SubdomainMask o2 = omega2_mask(g);
  return build_moment_dictionary(g, o2, default_moment_centers(g, o2, 2, 3),
                                 3.0 * std::max(g.hx(), g.hy()), KernelShape::Bump);
}

void BM_solve_laplace(benchmark::State& state) {
  const Grid g = bench_grid();
  const PoissonSolver solver(g);
  const Field f = forcing({0.7, -0.3, 1.1}, g, omega1_mask(g));
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(f));
}
BENCHMARK(BM_solve_laplace);

void BM_geim_build(benchmark::State& state) {
  const Grid g = bench_grid();
  const std::vector<Field> training = bench_training(g, 4);
  const Dictionary dict = bench_dictionary(g);
  const SubdomainMask o2 = omega2_mask(g);
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(geim_build(training, dict, o2, Product::L2, M, 1e-12));
}
BENCHMARK(BM_geim_build)->Arg(4)->Arg(8);

void BM_lebesgue_exact(benchmark::State& state) {
  const Grid g = bench_grid();
  const std::vector<Field> training = bench_training(g, 4);
  const Dictionary dict = bench_dictionary(g);
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training, dict, o2, Product::L2, 8, 1e-12);
  const ProductSpace space(o2, Product::L2);
  for (auto _ : state) benchmark::DoNotOptimize(space.op_norm(model, model.size()));
}
BENCHMARK(BM_lebesgue_exact);

}  // namespace

BENCHMARK_MAIN();
