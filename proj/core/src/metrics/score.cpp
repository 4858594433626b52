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

#include "newsprint/metrics/score.hpp"

#include <algorithm>
#include <stdexcept>

namespace newsprint::metrics {

using layout::BoundingBox;
using layout::Rect;

CoverageMask::CoverageMask(int width, int height)
    : width_(width),
      height_(height),
      counts_(static_cast<std::size_t>(std::max(0, width)) *
                  static_cast<std::size_t>(std::max(0, height)),
              0) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("mask dimensions must be positive");
  }
}

CoverageMask CoverageMask::from_boxes(int width, int height,
                                      std::span<const BoundingBox> boxes) {
  CoverageMask m(width, height);
  for (const auto& b : boxes) m.add(b.rect());
  return m;
}

void CoverageMask::add(const Rect& r) {
  const int x1 = std::max(r.x1, 0);
  const int x2 = std::min(r.x2, width_);
  const int y1 = std::max(r.y1, 0);
  const int y2 = std::min(r.y2, height_);
  for (int i = y1; i < y2; ++i) {
    auto* row = counts_.data() + static_cast<std::size_t>(i) * width_;
    for (int j = x1; j < x2; ++j) ++row[j];
  }
}

std::int64_t CoverageMask::pixels_at_least(std::uint32_t n) const {
  return std::count_if(counts_.begin(), counts_.end(),
                       [n](std::uint32_t c) { return c >= n; });
}

PixelCounts count_pixels(const Rect& frame, std::span<const BoundingBox> boxes) {
  PixelCounts out;
  out.total = static_cast<std::int64_t>(std::max(0, frame.width())) *
              std::max(0, frame.height());
  std::vector<Rect> rects;
  rects.reserve(boxes.size());
  for (const auto& b : boxes) {
    Rect r{std::max(b.x1, frame.x1), std::max(b.y1, frame.y1),
           std::min(b.x2, frame.x2), std::min(b.y2, frame.y2)};
    if (!r.empty()) rects.push_back(r);
  }
  if (rects.empty()) return out;

  std::vector<int> xs, ys;
  xs.reserve(rects.size() * 2);
  ys.reserve(rects.size() * 2);
  for (const auto& r : rects) {
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y1);
    ys.push_back(r.y2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  // 2-D difference array on the compressed grid.
  std::vector<std::int32_t> diff(nx * ny, 0);
  auto xi = [&](int x) {
    return static_cast<std::size_t>(
        std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  auto yi = [&](int y) {
    return static_cast<std::size_t>(
        std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };
  for (const auto& r : rects) {
    const auto a = xi(r.x1), b = xi(r.x2), c = yi(r.y1), d = yi(r.y2);
    diff[c * nx + a] += 1;
    diff[c * nx + b] -= 1;
    diff[d * nx + a] -= 1;
    diff[d * nx + b] += 1;
  }
  for (std::size_t row = 0; row < ny; ++row) {
    for (std::size_t col = 1; col < nx; ++col) {
      diff[row * nx + col] += diff[row * nx + col - 1];
    }
  }
  for (std::size_t row = 1; row < ny; ++row) {
    for (std::size_t col = 0; col < nx; ++col) {
      diff[row * nx + col] += diff[(row - 1) * nx + col];
    }
  }
  for (std::size_t row = 0; row + 1 < ny; ++row) {
    const std::int64_t h = ys[row + 1] - ys[row];
    for (std::size_t col = 0; col + 1 < nx; ++col) {
      const std::int32_t count = diff[row * nx + col];
      if (count <= 0) continue;
      const std::int64_t area = h * (xs[col + 1] - xs[col]);
      out.covered += area;
      if (count > 1) out.overlapped += area;
    }
  }
  return out;
}

namespace {

LayoutScore to_score(const PixelCounts& c) {
  if (c.total <= 0) return {};
  return {static_cast<double>(c.covered) / static_cast<double>(c.total),
          static_cast<double>(c.overlapped) / static_cast<double>(c.total)};
}

}  // namespace

LayoutScore score_layout(const layout::PageLayout& layout) {
  if (layout.width <= 0 || layout.height <= 0) {
    throw std::invalid_argument("page dimensions must be positive");
  }
  return to_score(
      count_pixels({0, 0, layout.width, layout.height}, layout.boxes));
}

LayoutScore score_print_area(const layout::PageLayout& layout) {
  Rect frame = layout.print_area;
  if (frame.empty()) {
    if (layout.boxes.empty()) return {};
    frame = layout.boxes.front().rect();
    for (const auto& b : layout.boxes) {
      frame.x1 = std::min(frame.x1, b.x1);
      frame.y1 = std::min(frame.y1, b.y1);
      frame.x2 = std::max(frame.x2, b.x2);
      frame.y2 = std::max(frame.y2, b.y2);
    }
  }
  frame.x1 = std::max(frame.x1, 0);
  frame.y1 = std::max(frame.y1, 0);
  frame.x2 = std::min(frame.x2, layout.width);
  frame.y2 = std::min(frame.y2, layout.height);
  return to_score(count_pixels(frame, layout.boxes));
}

}  // namespace newsprint::metrics
