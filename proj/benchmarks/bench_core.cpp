#include <benchmark/benchmark.h>

#include <random>

#include "gpco/duality.hpp"
#include "gpco/linalg.hpp"

namespace {

using namespace gpco;

Problem ex1() {
  GPolySet d(Matrix(0, 2), {}, Matrix::from_rows({{1, 0}, {0, 1}}, 2), {1, 2});
  GPolyFunc f({{{1, -1}, 1}, {{-1, -1}, 0}}, GPolySet(2));
  return Problem(std::move(f), std::move(d));
}

// f(x) = max_k ⟨v_k, x⟩ + β_k over a box, with random small integer data.
Problem random_problem(std::size_t n, std::size_t pieces, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::vector<AffinePiece> ps;
  for (std::size_t k = 0; k < pieces; ++k) {
    Vector v(n);
    for (auto& x : v) x = entry(rng);
    ps.push_back({v, Rational(entry(rng))});
  }
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(unit_vector(n, i));
    rhs.push_back(5);
    rows.push_back(scale(-1, unit_vector(n, i)));
    rhs.push_back(5);
  }
  return Problem(GPolyFunc(std::move(ps), GPolySet(n)), GPolySet(Matrix(0, n), {}, Matrix::from_rows(rows, n), rhs));
}

void BM_Ex1SolvePrimal(benchmark::State& state) {
  const Problem p = ex1();
  for (auto _ : state) benchmark::DoNotOptimize(solve_primal(p));
}
BENCHMARK(BM_Ex1SolvePrimal);

void BM_Ex1ExistenceReport(benchmark::State& state) {
  const Problem p = ex1();
  for (auto _ : state) benchmark::DoNotOptimize(existence_report(p));
}
BENCHMARK(BM_Ex1ExistenceReport);

void BM_Ex1SolveDual(benchmark::State& state) {
  const DualProblem dp(ex1());
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual(dp));
}
BENCHMARK(BM_Ex1SolveDual);

void BM_Ex1VerifyOptimal(benchmark::State& state) {
  const Problem p = ex1();
  const Vector x{Rational(-1, 2), 2};
  for (auto _ : state) benchmark::DoNotOptimize(verify_optimal(p, x));
}
BENCHMARK(BM_Ex1VerifyOptimal);

void BM_RandomSolvePrimal(benchmark::State& state) {
  const Problem p = random_problem(static_cast<std::size_t>(state.range(0)), 6, 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve_primal(p));
}
BENCHMARK(BM_RandomSolvePrimal)->Arg(2)->Arg(4)->Arg(8);

void BM_RandomDualityReport(benchmark::State& state) {
  const Problem p = random_problem(static_cast<std::size_t>(state.range(0)), 6, 29);
  for (auto _ : state) benchmark::DoNotOptimize(duality_report(p));
}
BENCHMARK(BM_RandomDualityReport)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
