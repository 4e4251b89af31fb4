/*
   Copyright 2026 The plaitalex Authors

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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "plaitalex/alexmodule.hpp"
#include "plaitalex/invariant.hpp"
#include "plaitalex/matrix.hpp"
#include "plaitalex/rep.hpp"

namespace px = plaitalex;

namespace {

px::BraidWord bench_word(int n, std::size_t len) { return px::random_word(n, len, 20260101); }

px::PolyMatrix bench_bprime(int n) { return px::b_prime(px::word_matrix(bench_word(n, 60))).entries; }

void BM_DetSerial(benchmark::State& state) {
    const px::PolyMatrix m = bench_bprime(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(px::det_division_free_serial(m));
}

void BM_DetParallel(benchmark::State& state) {
    const px::PolyMatrix m = bench_bprime(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(px::det_division_free(m));
}

void BM_FirstMinorsSerial(benchmark::State& state) {
    const px::BPrime b = px::b_prime(px::word_matrix(bench_word(static_cast<int>(state.range(0)), 60)));
    for (auto _ : state) benchmark::DoNotOptimize(px::all_first_minors_serial(b));
}

void BM_FirstMinorsParallel(benchmark::State& state) {
    const px::BPrime b = px::b_prime(px::word_matrix(bench_word(static_cast<int>(state.range(0)), 60)));
    for (auto _ : state) benchmark::DoNotOptimize(px::all_first_minors(b));
}

void BM_WordMatrixSerial(benchmark::State& state) {
    const px::BraidWord w = bench_word(static_cast<int>(state.range(0)), 200);
    for (auto _ : state) benchmark::DoNotOptimize(px::word_matrix_serial(w));
}

void BM_WordMatrixParallel(benchmark::State& state) {
    const px::BraidWord w = bench_word(static_cast<int>(state.range(0)), 200);
    for (auto _ : state) benchmark::DoNotOptimize(px::word_matrix(w));
}

}  // namespace

BENCHMARK(BM_DetSerial)->DenseRange(4, 10, 2);
BENCHMARK(BM_DetParallel)->DenseRange(4, 10, 2);
BENCHMARK(BM_FirstMinorsSerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_FirstMinorsParallel)->DenseRange(4, 8, 2);
BENCHMARK(BM_WordMatrixSerial)->Arg(4)->Arg(8);
BENCHMARK(BM_WordMatrixParallel)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
