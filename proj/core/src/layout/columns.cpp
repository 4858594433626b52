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

#include "newsprint/layout/columns.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace newsprint::layout {
namespace {

double median_of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Cluster {
  int min_center2;
  int max_center2;
  int min_x1;
  int max_x2;
};

int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

PageLayout assign_columns(PageLayout layout) {
  if (layout.print_area.empty()) {
    Rect area{0, 0, 0, 0};
    bool first = true;
    for (const auto& b : layout.boxes) {
      if (b.cls.kind() == BoxKind::kAbandoned) continue;
      if (first) {
        area = b.rect();
        first = false;
      } else {
        area.x1 = std::min(area.x1, b.x1);
        area.y1 = std::min(area.y1, b.y1);
        area.x2 = std::max(area.x2, b.x2);
        area.y2 = std::max(area.y2, b.y2);
      }
    }
    layout.print_area = area;
  }

  std::vector<const BoundingBox*> text;
  for (const auto& b : layout.boxes) {
    if (b.cls.kind() == BoxKind::kText && b.width() > 0) text.push_back(&b);
  }
  layout.columns.clear();
  if (text.empty()) return layout;

  std::vector<int> widths;
  widths.reserve(text.size());
  for (const auto* b : text) widths.push_back(b->width());
  const double median_width = median_of(widths);

  std::vector<const BoundingBox*> members;
  for (const auto* b : text) {
    if (b->width() <= kFullWidthRatio * median_width) members.push_back(b);
  }
  std::sort(members.begin(), members.end(),
            [](const BoundingBox* a, const BoundingBox* b) {
              return a->center_x2() < b->center_x2();
            });

  // Doubled centres; a doubled gap larger than the median width is a gap
  // larger than half the median width.
  std::vector<Cluster> clusters;
  for (const auto* b : members) {
    const int c2 = b->center_x2();
    if (clusters.empty() || c2 - clusters.back().max_center2 > median_width) {
      clusters.push_back({c2, c2, b->x1, b->x2});
    } else {
      auto& cl = clusters.back();
      cl.max_center2 = c2;
      cl.min_x1 = std::min(cl.min_x1, b->x1);
      cl.max_x2 = std::max(cl.max_x2, b->x2);
    }
  }

  const Rect& area = layout.print_area;
  std::vector<int> bounds{area.x1};
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    const int mid = floor_div2(clusters[i].max_x2 + clusters[i + 1].min_x1);
    const int lo = floor_div2(clusters[i].max_center2) + 1;
    const int hi = floor_div2(clusters[i + 1].min_center2);
    bounds.push_back(std::clamp(mid, lo, std::max(lo, hi)));
  }
  bounds.push_back(area.x2);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    layout.columns.push_back({bounds[i], std::max(bounds[i], bounds[i + 1])});
  }

  std::vector<int> col_widths;
  for (const auto& c : layout.columns) col_widths.push_back(c.width());
  const double median_col = median_of(col_widths);
  const int ncols = static_cast<int>(layout.columns.size());

  for (auto& b : layout.boxes) {
    if (b.cls.kind() == BoxKind::kAbandoned) continue;
    if (b.width() > kFullWidthRatio * median_col) {
      b.full_width = true;
      b.column.reset();
      continue;
    }
    b.full_width = false;
    const int c2 = b.center_x2();
    int col = 0;
    while (col + 1 < ncols && c2 >= 2 * layout.columns[col + 1].x1) ++col;
    b.column = col;
  }
  return layout;
}

}  // namespace newsprint::layout
