// Copyright 2026 The indepkit Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "indepkit/constructions.h"
#include "indepkit/implication.h"
#include "indepkit/model_check.h"

namespace indepkit {
namespace {

Relation random_binary_relation(int attributes, int rows, double null_rate,
                                std::uint64_t seed) {
  std::vector<std::string> names;
  for (int i = 0; i < attributes; ++i) names.push_back("A" + std::to_string(i));
  auto schema = std::make_shared<const Schema>(Schema::uniform(names, 3));
  Relation r(schema);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution null(null_rate);
  std::uniform_int_distribution<Value> value(0, 2);
  for (int i = 0; i < rows; ++i) {
    Tuple t(attributes);
    for (Value& v : t) v = null(rng) ? kNull : value(rng);
    r.add(t);
  }
  return r;
}

void BM_CheckPiaUnary(benchmark::State& state) {
  const Relation r = random_binary_relation(2, static_cast<int>(state.range(0)), 0.4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_pia_unary(r, 0, 1).verdict);
}
BENCHMARK(BM_CheckPiaUnary)->RangeMultiplier(4)->Range(16, 1024);

void BM_CheckCiaFast(benchmark::State& state) {
  const Relation r = random_binary_relation(6, static_cast<int>(state.range(0)), 0.2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_cia_fast(r, AttributeSet{0, 1}, AttributeSet{2, 3}));
  }
}
BENCHMARK(BM_CheckCiaFast)->RangeMultiplier(4)->Range(16, 4096);

void BM_CheckPiaSeparatingFamily(benchmark::State& state) {
  const SeparatingFamily f = pia_separating_family(static_cast<int>(state.range(0)), 2);
  const AttributeSet v = f.x | AttributeSet::single(f.y.front());
  const AttributeSet w = f.y - AttributeSet::single(f.y.front());
  for (auto _ : state) benchmark::DoNotOptimize(check_pia(f.relation, v, w).verdict);
}
BENCHMARK(BM_CheckPiaSeparatingFamily)->DenseRange(2, 4);

void BM_CheckPiaRandom(benchmark::State& state) {
  const Relation r = random_binary_relation(4, static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pia(r, AttributeSet{0, 1}, AttributeSet{2, 3}).verdict);
  }
}
BENCHMARK(BM_CheckPiaRandom)->RangeMultiplier(2)->Range(4, 32);

void BM_SatViaPia(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> var(1, n);
  CnfFormula phi{n, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<int> clause;
    for (int j = 0; j < 3; ++j) clause.push_back(rng() % 2 ? var(rng) : -var(rng));
    phi.clauses.push_back(clause);
  }
  for (auto _ : state) benchmark::DoNotOptimize(sat_via_pia(phi));
}
BENCHMARK(BM_SatViaPia)->DenseRange(2, 6, 2);

void BM_Saturation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintSet sigma;
  for (int i = 0; i + 1 < n; ++i) {
    sigma.insert({AttributeSet::first(i + 1), AttributeSet::single(i + 1), Modality::kCertain});
    sigma.insert({AttributeSet::single(i), AttributeSet::single((i + 2) % n),
                  Modality::kPossible});
  }
  for (auto _ : state) {
    const Saturation sat(sigma, RuleSystem::certain_possible(), AttributeSet::first(n));
    benchmark::DoNotOptimize(sat.size());
  }
}
BENCHMARK(BM_Saturation)->DenseRange(3, 5);

void BM_ImpliesCia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ConstraintSet sigma;
  for (int i = 0; i + 1 < n; ++i) {
    sigma.insert({AttributeSet::first(i + 1), AttributeSet::single(i + 1), Modality::kCertain});
  }
  const Atom goal{AttributeSet::single(0), AttributeSet::first(n) - AttributeSet::single(0),
                  Modality::kCertain};
  for (auto _ : state) benchmark::DoNotOptimize(implies_cia(sigma, goal));
}
BENCHMARK(BM_ImpliesCia)->DenseRange(4, 16, 4);

}  // namespace
}  // namespace indepkit

BENCHMARK_MAIN();
