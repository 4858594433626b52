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

#include "newsprint/image/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsprint::image {

int tile_height(int box_width, int box_height, double crop_ratio) {
  if (!std::isfinite(crop_ratio)) return box_height;
  // Small epsilon so ratios like 1.5 x 100 never land on 149.999...
  const double t = std::floor(crop_ratio * box_width + 1e-9);
  if (t >= box_height) return box_height;
  return std::max(1, static_cast<int>(t));
}

std::vector<layout::TileSpan> tile_spans(int extent, int tile,
                                         double overlap_fraction) {
  std::vector<layout::TileSpan> spans;
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    throw std::invalid_argument("overlap_fraction must be in [0, 1)");
  }
  if (extent <= 0 || tile <= 0) return spans;
  // A tile must be tall enough to overlap its successor and still advance.
  tile = std::max(tile, static_cast<int>(std::ceil(1.0 / (1.0 - overlap_fraction) - 1e-9)));
  if (tile >= extent) {
    spans.push_back({0, extent});
    return spans;
  }
  // Rounded up so the overlap is never below the nominal fraction.
  const int overlap =
      static_cast<int>(std::ceil(overlap_fraction * tile - 1e-9));
  const int step = std::max(1, tile - overlap);
  const int n = (extent - tile + step - 1) / step + 1;
  for (int i = 0; i + 1 < n; ++i) spans.push_back({i * step, tile});
  spans.push_back({extent - tile, tile});
  return spans;
}

TilePlan plan_tiles(const layout::BoundingBox& box, double crop_ratio,
                    double overlap_fraction) {
  TilePlan plan;
  plan.box_id = box.id;
  plan.crop_ratio = crop_ratio;
  plan.overlap_fraction = overlap_fraction;
  const int h = box.height();
  if (h <= 0 || box.width() <= 0) return plan;
  plan.tiles = tile_spans(h, tile_height(box.width(), h, crop_ratio),
                          overlap_fraction);
  return plan;
}

TilePlan plan_tiles(const layout::BoundingBox& box, const ImagePrepConfig& cfg) {
  return plan_tiles(box, cfg.crop_ratio, cfg.overlap_fraction);
}

}  // namespace newsprint::image
