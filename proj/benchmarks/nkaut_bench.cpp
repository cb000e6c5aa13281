/*
   Copyright 2026 The nkaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "nkaut/nottingham.hpp"

namespace {

nk::TruncatedSeries random_series(const nk::Field& f, int v, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<nk::Coeff> c(n - v);
    for (auto& x : c) x = f.at_index(rng() % f.size());
    c[0] = f.one();
    return nk::TruncatedSeries::from_coeffs(f, v, c, n);
}

void BM_FieldMul(benchmark::State& state) {
    const nk::Field f = nk::Field::make(2, static_cast<int>(state.range(0)));
    nk::Coeff a = f.x(), b = f.add(f.x(), f.one());
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_SeriesMul(benchmark::State& state) {
    const nk::Field f = nk::Field::make(2, 4);
    const int n = static_cast<int>(state.range(0));
    const auto a = random_series(f, 0, n, 1), b = random_series(f, 0, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(256)->Arg(1024);

void BM_Compose(benchmark::State& state) {
    const nk::Field f = nk::Field::make(3, 2);
    const int n = static_cast<int>(state.range(0));
    const auto a = random_series(f, 1, n, 3), b = random_series(f, 1, n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(nk::compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(32)->Arg(128)->Arg(256);

void BM_Reversion(benchmark::State& state) {
    const nk::Field f = nk::Field::make(5);
    const auto a = random_series(f, 1, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(nk::reversion(a));
}
BENCHMARK(BM_Reversion)->Arg(32)->Arg(128)->Arg(256);

void BM_SigmaB(benchmark::State& state) {
    const nk::Field f = nk::Field::make(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(nk::sigma_b(f.element(f.x()), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SigmaB)->Arg(64)->Arg(256)->Arg(1024);

void BM_OrderSigmaB(benchmark::State& state) {
    const nk::Field f = nk::Field::make(2);
    const auto s = nk::sigma_b(f.element(0), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nk::aut_order(s, 8));
}
BENCHMARK(BM_OrderSigmaB)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
