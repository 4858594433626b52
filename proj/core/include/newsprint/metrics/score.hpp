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

#ifndef NEWSPRINT_METRICS_SCORE_HPP_
#define NEWSPRINT_METRICS_SCORE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "newsprint/layout/box.hpp"

namespace newsprint::metrics {

// Per-pixel count of the boxes containing each pixel. Pixel (i, j) is row i,
// column j and lies in a box iff x1 <= j < x2 and y1 <= i < y2.
class CoverageMask {
 public:
  CoverageMask(int width, int height);

  static CoverageMask from_boxes(int width, int height,
                                 std::span<const layout::BoundingBox> boxes);

  void add(const layout::Rect& r);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint32_t at(int row, int col) const {
    return counts_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::int64_t pixels_at_least(std::uint32_t n) const;

 private:
  int width_;
  int height_;
  std::vector<std::uint32_t> counts_;
};

struct LayoutScore {
  double coverage = 0.0;  // fraction of pixels in >= 1 box
  double overlap = 0.0;   // fraction of pixels in >= 2 boxes
};

// Exact pixel counts behind a LayoutScore.
struct PixelCounts {
  std::int64_t covered = 0;
  std::int64_t overlapped = 0;
  std::int64_t total = 0;
};

// Counts pixels covered by >= 1 and >= 2 of the boxes inside `frame`
// (boxes are clipped to it) without building a mask: a sweep over the
// compressed grid of box edges. Equal to the mask definition bit for bit.
PixelCounts count_pixels(const layout::Rect& frame,
                         std::span<const layout::BoundingBox> boxes);

// Coverage and overlap over the whole page (denominator width x height).
LayoutScore score_layout(const layout::PageLayout& layout);

// Variant that scores only the print area and divides by its size.
LayoutScore score_print_area(const layout::PageLayout& layout);

}  // namespace newsprint::metrics

#endif  // NEWSPRINT_METRICS_SCORE_HPP_
