#include <random>

#include <benchmark/benchmark.h>

#include "grassmetric/grassmann.hpp"
#include "grassmetric/ninner.hpp"

namespace {

using namespace grassmetric;

Matrix random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

VectorTuple tuple_of(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return VectorTuple(std::move(rows));
}

void BM_Determinant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_rows(rng, k, k);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16);

void BM_NInnerGram(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = 2 * n;
  const NInnerForm form = NInnerForm::gram_standard(m);
  const VectorTuple a = tuple_of(random_rows(rng, n, m));
  const VectorTuple b = tuple_of(random_rows(rng, n, m));
  for (auto _ : state) benchmark::DoNotOptimize(n_inner(form, a, b));
}
BENCHMARK(BM_NInnerGram)->Arg(2)->Arg(3)->Arg(4);

void BM_NInnerDiagonal(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = 2 * n;
  const NInnerForm form = NInnerForm::diagonal(DiagonalNForm(m, n, {}));
  const VectorTuple a = tuple_of(random_rows(rng, n, m));
  const VectorTuple b = tuple_of(random_rows(rng, n, m));
  for (auto _ : state) benchmark::DoNotOptimize(n_inner(form, a, b));
}
BENCHMARK(BM_NInnerDiagonal)->Arg(2)->Arg(3)->Arg(4);

void BM_GrassmannDistance(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = 2 * n;
  const NInnerForm form = NInnerForm::gram_standard(m);
  const Subspace l(form, random_rows(rng, n, m));
  const Subspace r(form, random_rows(rng, n, m));
  const SubspacePair p(l, r);
  for (auto _ : state) benchmark::DoNotOptimize(grassmann_distance(p));
}
BENCHMARK(BM_GrassmannDistance)->Arg(2)->Arg(3)->Arg(4);

void BM_DualAngleCheck(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const NInnerForm form = NInnerForm::gram_standard(6);
  const Subspace l(form, random_rows(rng, 3, 6));
  const Subspace r(form, random_rows(rng, 3, 6));
  const SubspacePair p(l, r);
  for (auto _ : state) benchmark::DoNotOptimize(dual_angle_check(p));
}
BENCHMARK(BM_DualAngleCheck);

}  // namespace

BENCHMARK_MAIN();
