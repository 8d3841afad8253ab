// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "readk/bounds.h"
#include "readk/exact_engine.h"
#include "readk/generators.h"
#include "readk/sampler.h"
#include "readk/shearer_audit.h"

namespace readk {
namespace {

// n fair bits, y_i = x_i xor x_{i+1}: one component of 2^n assignments.
FamilySpec xor_chain(int n) {
  std::vector<Variable> vars;
  std::vector<ReadFunction> fns;
  for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i), 2, {}});
  for (int i = 0; i + 1 < n; ++i) {
    fns.push_back({"y" + std::to_string(i),
                   {static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)},
                   {0, 1, 1, 0}});
  }
  return FamilySpec(std::move(vars), std::move(fns));
}

void BM_SumPmfChain(benchmark::State& state) {
  const FamilySpec spec = xor_chain(static_cast<int>(state.range(0)));
  EngineOptions options;
  options.guard = std::uint64_t{1} << 26;
  for (auto _ : state) benchmark::DoNotOptimize(sum_pmf(spec, options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_SumPmfChain)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);

void BM_SumPmfBlocks(benchmark::State& state) {
  // Many small components: dominated by the convolution.
  const FamilySpec spec = gen_block_tight(3, static_cast<int>(state.range(0)), Rational{1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(sum_pmf(spec));
}
BENCHMARK(BM_SumPmfBlocks)->RangeMultiplier(4)->Range(16, 1024);

void BM_ConditionalMarginals(benchmark::State& state) {
  const FamilySpec spec = xor_chain(static_cast<int>(state.range(0)));
  const TailQuery q{static_cast<double>(state.range(0)) / 2, Tail::kUpper};
  for (auto _ : state) benchmark::DoNotOptimize(conditional_function_marginals(spec, q));
}
BENCHMARK(BM_ConditionalMarginals)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);

void BM_ProofTrace(benchmark::State& state) {
  const FamilySpec spec = gen_random_family({12, 10, 3, 4, 7});
  const TailQuery q{6.0, Tail::kUpper};
  for (auto _ : state) benchmark::DoNotOptimize(proof_trace(spec, q));
}
BENCHMARK(BM_ProofTrace)->Unit(benchmark::kMillisecond);

void BM_ReadKBound(benchmark::State& state) {
  double eps = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(read_k_tail_bound({1000, 4, 0.3, eps, Tail::kUpper}));
    eps = eps < 0.6 ? eps + 1e-4 : 0.01;
  }
}
BENCHMARK(BM_ReadKBound);

void BM_EstimateTail(benchmark::State& state) {
  const FamilySpec spec = gen_random_family({12, 10, 3, 4, 7});
  const TailQuery q{6.0, Tail::kUpper};
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_tail(spec, q, samples, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateTail)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace readk

BENCHMARK_MAIN();
