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

#include "newsprint/layout/postprocess.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "newsprint/layout/columns.hpp"
#include "newsprint/layout/reading_order.hpp"

namespace newsprint::layout {
namespace {

bool is_column_box(const BoundingBox& b) { return !b.full_width; }

// Columns a full-width box crosses (positive horizontal overlap).
std::pair<int, int> covered_range(const BoundingBox& b,
                                  const std::vector<Column>& cols) {
  int first = -1;
  int last = -1;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (std::min(b.x2, cols[c].x2) > std::max(b.x1, cols[c].x1)) {
      if (first < 0) first = c;
      last = c;
    }
  }
  return {first, last};
}

// Per column, the indices of the boxes stacked in it, in reading order.
// Requires layout.boxes to be sorted in reading order.
std::vector<std::vector<std::size_t>> column_stacks(const PageLayout& layout) {
  std::vector<std::vector<std::size_t>> stacks(layout.columns.size());
  for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
    const auto& b = layout.boxes[i];
    if (is_column_box(b)) {
      const int c = b.column.value_or(0);
      if (c >= 0 && c < static_cast<int>(stacks.size())) stacks[c].push_back(i);
    } else {
      const auto [first, last] = covered_range(b, layout.columns);
      for (int c = first; c >= 0 && c <= last; ++c) stacks[c].push_back(i);
    }
  }
  return stacks;
}

void drop_if(PageLayout& layout, auto pred) {
  std::erase_if(layout.boxes, pred);
}

void drop_degenerate(PageLayout& layout) {
  drop_if(layout, [](const BoundingBox& b) {
    return b.width() <= 0 || b.height() <= 0;
  });
}

void mark_abandoned(PageLayout& layout, double band_fraction) {
  const double band2 = 2.0 * band_fraction * layout.height;
  const double bottom2 = 2.0 * layout.height - band2;
  for (auto& b : layout.boxes) {
    if (b.cls.kind() == BoxKind::kAbandoned || b.synthetic) continue;
    const double cy2 = b.center_y2();
    if (cy2 < band2 || cy2 >= bottom2) b.cls = BoxClass(BoxKind::kAbandoned);
  }
}

void clip_to_page(PageLayout& layout) {
  for (auto& b : layout.boxes) {
    b.x1 = std::clamp(b.x1, 0, layout.width);
    b.x2 = std::clamp(b.x2, 0, layout.width);
    b.y1 = std::clamp(b.y1, 0, layout.height);
    b.y2 = std::clamp(b.y2, 0, layout.height);
  }
}

Rect union_of(const std::vector<BoundingBox>& boxes) {
  Rect r = boxes.front().rect();
  for (const auto& b : boxes) {
    r.x1 = std::min(r.x1, b.x1);
    r.y1 = std::min(r.y1, b.y1);
    r.x2 = std::max(r.x2, b.x2);
    r.y2 = std::max(r.y2, b.y2);
  }
  return r;
}

void adjust_lower_limits(PageLayout& layout) {
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> limit(layout.boxes.size(), kUnset);
  for (const auto& stack : column_stacks(layout)) {
    for (std::size_t k = 0; k + 1 < stack.size(); ++k) {
      const int next_top = layout.boxes[stack[k + 1]].y1;
      limit[stack[k]] = std::min(limit[stack[k]], next_top);
    }
  }
  for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
    if (limit[i] != kUnset) layout.boxes[i].y2 = limit[i];
  }
  drop_degenerate(layout);
}

void snap_to_columns(PageLayout& layout) {
  const auto& cols = layout.columns;
  for (auto& b : layout.boxes) {
    if (is_column_box(b)) {
      const auto& c = cols[b.column.value_or(0)];
      b.x1 = c.x1;
      b.x2 = c.x2;
    } else {
      const auto [first, last] = covered_range(b, cols);
      if (first < 0) continue;
      b.x1 = cols[first].x1;
      b.x2 = cols[last].x2;
    }
  }
}

BoundingBox make_fill(const PageLayout& layout, int column, int y1, int y2) {
  BoundingBox b;
  b.id = layout.page_id + "_fill_c" + std::to_string(column) + "_y" +
         std::to_string(y1);
  b.x1 = layout.columns[column].x1;
  b.x2 = layout.columns[column].x2;
  b.y1 = y1;
  b.y2 = y2;
  b.cls = BoxClass(BoxKind::kText);
  b.confidence = 0.0;
  b.column = column;
  b.synthetic = true;
  return b;
}

enum class FillMode {
  // Insert a synthetic box into every void.
  kInsert,
  // Close voids by growing neighbouring column boxes; insert only where a
  // void is bounded by full-width boxes or the print-area edge alone.
  kClose,
};

void fill_voids(PageLayout& layout, FillMode mode) {
  const int top = layout.print_area.y1;
  const int bottom = layout.print_area.y2;
  std::vector<BoundingBox> added;
  auto& boxes = layout.boxes;
  const auto stacks = column_stacks(layout);
  for (int c = 0; c < static_cast<int>(stacks.size()); ++c) {
    int cursor = top;
    std::optional<std::size_t> prev;
    for (std::size_t i : stacks[c]) {
      auto& b = boxes[i];
      if (b.y1 > cursor) {
        if (mode == FillMode::kClose && is_column_box(b)) {
          b.y1 = cursor;
        } else if (mode == FillMode::kClose && prev &&
                   is_column_box(boxes[*prev])) {
          boxes[*prev].y2 = b.y1;
        } else {
          added.push_back(make_fill(layout, c, cursor, b.y1));
        }
      }
      cursor = std::max(cursor, b.y2);
      prev = i;
    }
    if (cursor < bottom) {
      if (mode == FillMode::kClose && prev && is_column_box(boxes[*prev])) {
        boxes[*prev].y2 = bottom;
      } else {
        added.push_back(make_fill(layout, c, cursor, bottom));
      }
    }
  }
  for (auto& b : added) boxes.push_back(std::move(b));
}

void merge_small_boxes(PageLayout& layout, double ratio) {
  auto& boxes = layout.boxes;
  std::vector<bool> removed(boxes.size(), false);
  for (const auto& stack : column_stacks(layout)) {
    std::optional<std::size_t> cur;
    for (std::size_t i : stack) {
      const auto& b = boxes[i];
      const bool text = b.cls.kind() == BoxKind::kText;
      if (!is_column_box(b) || !text) {
        cur.reset();
        continue;
      }
      if (cur) {
        auto& c = boxes[*cur];
        if (b.y2 - c.y1 <= ratio * c.width()) {
          c.y2 = std::max(c.y2, b.y2);
          c.x1 = std::min(c.x1, b.x1);
          c.x2 = std::max(c.x2, b.x2);
          c.confidence = std::max(c.confidence, b.confidence);
          c.synthetic = c.synthetic && b.synthetic;
          removed[i] = true;
          continue;
        }
      }
      cur = i;
    }
  }
  std::vector<BoundingBox> kept;
  kept.reserve(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!removed[i]) kept.push_back(std::move(boxes[i]));
  }
  boxes = std::move(kept);
}

void assign_ids(PageLayout& layout) {
  int block = -1;
  bool in_column_block = false;
  std::vector<int> rows(layout.columns.size(), 0);
  for (auto& b : layout.boxes) {
    std::string suffix;
    if (!is_column_box(b)) {
      ++block;
      in_column_block = false;
      const int first = std::max(0, covered_range(b, layout.columns).first);
      suffix = box_id_suffix(block, first, 0);
    } else {
      if (!in_column_block) {
        ++block;
        in_column_block = true;
        std::fill(rows.begin(), rows.end(), 0);
      }
      const int c = b.column.value_or(0);
      suffix = box_id_suffix(block, c, rows[c]++);
    }
    b.id = layout.page_id.empty() ? suffix : layout.page_id + "_" + suffix;
  }
}

}  // namespace

std::string box_id_suffix(int block, int column, int row) {
  return "B" + std::to_string(block) + "C" + std::to_string(column) + "R" +
         std::to_string(row);
}

PageLayout reclass_invalid_only(PageLayout layout) {
  for (auto& b : layout.boxes) {
    if (b.cls.kind() == BoxKind::kInvalid) b.cls = BoxClass(BoxKind::kTitle);
  }
  return layout;
}

PageLayout postprocess_bboxes(PageLayout layout, const PostprocessConfig& cfg) {
  cfg.validate();

  mark_abandoned(layout, cfg.abandoned_band_fraction);
  drop_if(layout, [](const BoundingBox& b) {
    return b.cls.kind() == BoxKind::kAbandoned;
  });
  clip_to_page(layout);
  drop_degenerate(layout);
  layout.columns.clear();
  if (layout.boxes.empty()) {
    layout.print_area = {};
    return layout;
  }
  layout.print_area = union_of(layout.boxes);

  layout = assign_columns(std::move(layout));
  if (layout.columns.empty()) {
    // No text boxes to find columns from: one column over the print area.
    layout.columns.push_back({layout.print_area.x1, layout.print_area.x2});
    for (auto& b : layout.boxes) {
      b.full_width = false;
      b.column = 0;
    }
  }

  for (auto& b : layout.boxes) {
    if (b.cls.kind() == BoxKind::kInvalid) b.cls = BoxClass(BoxKind::kTitle);
  }

  layout = reading_order(std::move(layout));
  adjust_lower_limits(layout);
  snap_to_columns(layout);
  if (cfg.fill_columns) {
    fill_voids(layout, FillMode::kInsert);
    layout = reading_order(std::move(layout));
  }

  const int min_height = cfg.minimum_height_threshold;
  drop_if(layout,
          [min_height](const BoundingBox& b) { return b.height() < min_height; });
  merge_small_boxes(layout, cfg.merge_height_ratio);

  adjust_lower_limits(layout);
  if (cfg.fill_columns) {
    layout = reading_order(std::move(layout));
    fill_voids(layout, FillMode::kClose);
  }

  layout = reading_order(std::move(layout));
  assign_ids(layout);
  return layout;
}

}  // namespace newsprint::layout
