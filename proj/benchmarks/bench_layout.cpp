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

#include <benchmark/benchmark.h>

#include "newsprint/layout/postprocess.hpp"
#include "newsprint/metrics/score.hpp"

namespace {

using newsprint::layout::BoundingBox;
using newsprint::layout::BoxClass;
using newsprint::layout::PageLayout;

// A broadsheet-like page: `columns` columns of stacked text blocks.
PageLayout make_page(int columns, int rows, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> jitter(-8, 8);
  PageLayout p;
  p.page_id = "bench";
  p.width = 300 * columns + 100;
  p.height = 4000;
  const int row_h = 3600 / rows;
  int n = 0;
  for (int c = 0; c < columns; ++c) {
    for (int r = 0; r < rows; ++r) {
      BoundingBox b;
      b.id = "b" + std::to_string(n++);
      b.cls = BoxClass::parse("text");
      b.x1 = 50 + c * 300 + 5 + jitter(rng) / 2;
      b.x2 = 50 + (c + 1) * 300 - 5 + jitter(rng) / 2;
      b.y1 = 200 + r * row_h + jitter(rng);
      b.y2 = 200 + (r + 1) * row_h + jitter(rng);
      p.boxes.push_back(b);
    }
  }
  return p;
}

void BM_ScoreLayout(benchmark::State& state) {
  const auto page = make_page(static_cast<int>(state.range(0)), 40, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsprint::metrics::score_layout(page));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(page.boxes.size()));
}
BENCHMARK(BM_ScoreLayout)->Arg(3)->Arg(6)->Arg(12);

void BM_CoverageMask(benchmark::State& state) {
  const auto page = make_page(6, 40, 2);
  for (auto _ : state) {
    const auto mask =
        newsprint::metrics::CoverageMask::from_boxes(page.width, page.height, page.boxes);
    benchmark::DoNotOptimize(mask.pixels_at_least(2));
  }
}
BENCHMARK(BM_CoverageMask);

void BM_Postprocess(benchmark::State& state) {
  const auto page = make_page(static_cast<int>(state.range(0)), 30, 3);
  newsprint::layout::PostprocessConfig cfg;
  cfg.fill_columns = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsprint::layout::postprocess_bboxes(page, cfg));
  }
}
BENCHMARK(BM_Postprocess)->Args({3, 0})->Args({6, 0})->Args({6, 1});

}  // namespace
