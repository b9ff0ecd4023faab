// Copyright 2026 The covnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "covnet/covering.hpp"
#include "covnet/matrix.hpp"
#include "covnet/network.hpp"
#include "covnet/rank_metric.hpp"

using namespace covnet;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> d(0, f.size() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Field f = Field::of_size(static_cast<unsigned>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(f, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({16, 2})->Args({64, 2})->Args({16, 256})->Args({64, 256})->Args({32, 512});

void BM_CoveringCheck(benchmark::State& state) {
  const Field f = Field::of_size(static_cast<unsigned>(state.range(0)));
  const auto alpha = static_cast<std::size_t>(state.range(1));
  const auto code = dual_lifted_mrd_covering_code(4, 2, 1, alpha, f);
  for (auto _ : state) benchmark::DoNotOptimize(is_covering_code(code).covering);
  state.counters["codewords"] = static_cast<double>(code.size());
}
BENCHMARK(BM_CoveringCheck)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_SolutionVerify(benchmark::State& state) {
  const Field f = Field::of_size(2);
  const auto code = dual_lifted_mrd_covering_code(4, 2, 1, 2, f);
  const auto sol = solution_from_code(code, NetworkParams{4, code.size(), 2, 2, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution(sol).valid);
}
BENCHMARK(BM_SolutionVerify);

void BM_BruteForce(benchmark::State& state) {
  const Field f = Field::of_size(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_covering_code(n, 1, 1, 2, f).size);
}
BENCHMARK(BM_BruteForce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Gabidulin(benchmark::State& state) {
  const Field f = Field::of_size(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gabidulin_code(f, 2, 3, 2).codewords.size());
}
BENCHMARK(BM_Gabidulin)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
