// Copyright 2026 The gf4lcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "gf4lcd/classify.hpp"
#include "gf4lcd/code.hpp"
#include "gf4lcd/constructions.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/nonexistence.hpp"

using namespace gf4lcd;

namespace {

MultiplicityVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> point(0, 20);
  MultiplicityVector m{3, std::vector<int>(21, 0)};
  for (int i = 0; i < n; ++i) ++m.m[static_cast<std::size_t>(point(rng))];
  return m;
}

void BM_WeightEnumerator(benchmark::State& state) {
  const auto code = extend_with_simplex(c26().code, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_enumerator(code));
  state.SetLabel("n=" + std::to_string(code.length()));
}
BENCHMARK(BM_WeightEnumerator)->Arg(0)->Arg(4)->Arg(40);

void BM_HermitianLcd(benchmark::State& state) {
  const auto code = c26().code;
  for (auto _ : state) benchmark::DoNotOptimize(is_hermitian_lcd(code));
}
BENCHMARK(BM_HermitianLcd);

void BM_MinWeightFromMultiplicities(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_vector(rng, 64);
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_from_multiplicities(m));
}
BENCHMARK(BM_MinWeightFromMultiplicities);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<MultiplicityVector> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_vector(rng, static_cast<int>(state.range(0))));
  pgl_point_action(3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(26)->Arg(64);

void BM_IsCanonical(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<MultiplicityVector> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(canonical_form(random_vector(rng, 43)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_canonical(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_IsCanonical);

void BM_Classify(benchmark::State& state) {
  ClassificationQuery q;
  q.n = state.range(0);
  q.d = state.range(1);
  q.method = state.range(2) == 0 ? ClassificationMethod::kOrbit : ClassificationMethod::kShorten;
  pgl_point_action(3);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = classify(q);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.classes.data());
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Classify)
    ->Args({26, 19, 0})
    ->Args({26, 19, 1})
    ->Args({43, 32, 0})
    ->Args({43, 32, 1})
    ->Args({64, 48, 0})
    ->Args({64, 48, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Dim2CaseAnalysis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dim2_case_analysis(state.range(0)));
}
BENCHMARK(BM_Dim2CaseAnalysis)->Arg(99)->Arg(504);

}  // namespace

BENCHMARK_MAIN();
