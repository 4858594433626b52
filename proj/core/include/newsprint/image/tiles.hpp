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

#ifndef NEWSPRINT_IMAGE_TILES_HPP_
#define NEWSPRINT_IMAGE_TILES_HPP_

#include <string>
#include <vector>

#include "newsprint/image/config.hpp"
#include "newsprint/layout/box.hpp"

namespace newsprint::image {

struct TilePlan {
  std::string box_id;
  std::vector<layout::TileSpan> tiles;
  double crop_ratio = 1.5;
  double overlap_fraction = 0.2;
};

// Tile height for a box: floor(ratio x width), at least 1 and at most the
// box height.
int tile_height(int box_width, int box_height, double crop_ratio);

// Tiles of length `tile` over [0, extent) with the stepping described below.
// Tiles shorter than ceil(1 / (1 - overlap)) cannot both overlap and advance
// and are lengthened to that.
std::vector<layout::TileSpan> tile_spans(int extent, int tile,
                                         double overlap_fraction);

// Splits a box into vertical tiles of height t = tile_height(...). Tiles
// start every t - ceil(overlap x t) pixels; the last tile is re-anchored to
// end exactly at the box bottom, so it overlaps its predecessor by at least
// the nominal amount.
TilePlan plan_tiles(const layout::BoundingBox& box, double crop_ratio,
                    double overlap_fraction);
TilePlan plan_tiles(const layout::BoundingBox& box, const ImagePrepConfig& cfg);

}  // namespace newsprint::image

#endif  // NEWSPRINT_IMAGE_TILES_HPP_
