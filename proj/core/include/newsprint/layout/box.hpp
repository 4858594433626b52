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

#ifndef NEWSPRINT_LAYOUT_BOX_HPP_
#define NEWSPRINT_LAYOUT_BOX_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace newsprint::layout {

enum class BoxKind { kText, kTitle, kFigure, kTable, kAbandoned, kInvalid };

// Class of a page region. Labels the detector emits that make no sense on a
// newspaper page ("equation", "table caption", ...) are kept as kInvalid with
// the original label so they can be reported and re-classed later.
class BoxClass {
 public:
  BoxClass() = default;
  explicit BoxClass(BoxKind kind) : kind_(kind) {}

  static BoxClass invalid(std::string original_label);

  // Maps a detector label (DocLayout-YOLO style or our own output names).
  static BoxClass parse(std::string_view label);

  BoxKind kind() const { return kind_; }
  const std::string& original_label() const { return original_label_; }

  // Output name: "text", "title", "figure", "table", "abandoned", or the
  // original label for invalid classes.
  std::string name() const;

  bool operator==(const BoxClass&) const = default;

 private:
  BoxKind kind_ = BoxKind::kText;
  std::string original_label_;
};

// One vertical slice of a box crop, relative to the box's top edge.
struct TileSpan {
  int y_offset = 0;
  int height = 0;
  bool operator==(const TileSpan&) const = default;
};

// Pixel rectangle, origin top-left, half-open: [x1, x2) x [y1, y2).
struct Rect {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  bool empty() const { return x2 <= x1 || y2 <= y1; }
  bool operator==(const Rect&) const = default;
};

struct BoundingBox {
  std::string id;
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;
  BoxClass cls;
  double confidence = 0.0;
  std::optional<int> column;
  // Spans more than one column; acts as a reading-order block separator.
  bool full_width = false;
  std::optional<int> reading_order;
  // Inserted by column filling rather than detected.
  bool synthetic = false;
  std::vector<TileSpan> tiles;

  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  // Doubled centre so it stays integral.
  int center_x2() const { return x1 + x2; }
  int center_y2() const { return y1 + y2; }
  Rect rect() const { return {x1, y1, x2, y2}; }

  bool operator==(const BoundingBox&) const = default;
};

// Horizontal extent of a text column, half-open [x1, x2).
struct Column {
  int x1 = 0;
  int x2 = 0;
  int width() const { return x2 - x1; }
  bool operator==(const Column&) const = default;
};

struct PageLayout {
  std::string page_id;
  std::string image;
  int width = 0;
  int height = 0;
  Rect print_area;
  std::vector<Column> columns;
  std::vector<BoundingBox> boxes;

  bool operator==(const PageLayout&) const = default;
};

struct PostprocessConfig {
  int minimum_height_threshold = 0;
  bool fill_columns = false;
  double merge_height_ratio = 1.5;
  double abandoned_band_fraction = 0.05;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace newsprint::layout

#endif  // NEWSPRINT_LAYOUT_BOX_HPP_
