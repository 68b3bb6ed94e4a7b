// Copyright 2026 The dwdecomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dwd/auctions.hpp"
#include "dwd/batch.hpp"
#include "dwd/simplex.hpp"

namespace {

dwd::MasterState random_state(std::size_t n, std::vector<double>& column) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
  dwd::MasterState s;
  s.basis_inverse = dwd::DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.basis_inverse(i, j) += noise(rng);
  }
  s.rhs.assign(n, 1.0);
  s.dual_row.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back(dwd::BasisLabel::slack(i));
  column.resize(n);
  for (double& v : column) v = noise(rng);
  column[0] = 1.0;
  return s;
}

void BM_PivotReference(benchmark::State& state) {
  std::vector<double> col;
  auto s = random_state(static_cast<std::size_t>(state.range(0)), col);
  for (auto _ : state) {
    dwd::reference::pivot_in_place(s, col, 1e-6, 0, dwd::BasisLabel::point(1));
    benchmark::DoNotOptimize(s.rhs.data());
  }
}

void BM_PivotOpenMP(benchmark::State& state) {
  std::vector<double> col;
  auto s = random_state(static_cast<std::size_t>(state.range(0)), col);
  for (auto _ : state) {
    dwd::pivot_in_place(s, col, 1e-6, 0, dwd::BasisLabel::point(1));
    benchmark::DoNotOptimize(s.rhs.data());
  }
}

std::vector<dwd::BatchProblem> corpus(std::size_t count) {
  std::vector<dwd::BatchProblem> problems;
  for (std::size_t k = 0; k < count; ++k) {
    const auto inst = dwd::generate_capped_instance(2 + k % 4, 3 + k % 6, 1000 + k, 10);
    problems.push_back(dwd::make_auction_problem(inst, 2.0));
  }
  return problems;
}

void BM_DwBatch(benchmark::State& state, dwd::Execution execution) {
  const auto problems = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto results = dwd::solve_dw_batch(problems, execution);
    benchmark::DoNotOptimize(results.data());
  }
}

}  // namespace

BENCHMARK(BM_PivotReference)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_PivotOpenMP)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK_CAPTURE(BM_DwBatch, serial, dwd::Execution::kSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DwBatch, parallel, dwd::Execution::kParallel)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
