/* Copyright 2026 The Newsprint Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "newsprint/eval/cer.hpp"
#include "newsprint/ocr/repetition.hpp"

namespace {

std::string random_text(std::size_t n, unsigned seed) {
  static constexpr char kChars[] = "etaoinshrdlu     ,.";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sizeof kChars - 2);
  std::string s(n, ' ');
  for (auto& c : s) c = kChars[pick(rng)];
  return s;
}

// A transcript with about 1% character noise against its reference.
void BM_Cer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ref = random_text(n, 1);
  auto hyp = ref;
  std::mt19937 rng(2);
  for (std::size_t i = 0; i < n / 100; ++i) hyp[rng() % n] = 'x';
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsprint::eval::cer(ref, hyp));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Cer)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_RepetitionClean(benchmark::State& state) {
  const auto text = random_text(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsprint::ocr::has_repetition(text));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RepetitionClean)->Arg(1000)->Arg(4000)->Arg(16000);

void BM_RepetitionLoop(benchmark::State& state) {
  auto text = random_text(2000, 4);
  for (int k = 0; k < 60; ++k) text += "the honourable member for the borough of ";
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsprint::ocr::find_repetition(text));
  }
}
BENCHMARK(BM_RepetitionLoop);

}  // namespace
