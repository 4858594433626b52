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

#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "newsprint/layout/columns.hpp"
#include "newsprint/layout/layout_io.hpp"
#include "newsprint/layout/postprocess.hpp"
#include "newsprint/layout/reading_order.hpp"
#include "newsprint/metrics/score.hpp"
#include "oracles.hpp"

namespace newsprint::layout {
namespace {

using testing::Rng;

BoundingBox box(std::string id, int x1, int y1, int x2, int y2,
                BoxClass cls = BoxClass(BoxKind::kText)) {
  BoundingBox b;
  b.id = std::move(id);
  b.x1 = x1;
  b.y1 = y1;
  b.x2 = x2;
  b.y2 = y2;
  b.cls = std::move(cls);
  return b;
}

PageLayout page(int w, int h, std::vector<BoundingBox> boxes) {
  PageLayout p;
  p.page_id = "P_1850-01-01_page_1";
  p.width = w;
  p.height = h;
  p.boxes = std::move(boxes);
  return p;
}

const BoundingBox& find(const PageLayout& p, std::string_view id) {
  for (const auto& b : p.boxes) {
    if (b.id == id) return b;
  }
  throw std::out_of_range(std::string(id));
}

TEST(BoxClass, ParsesDetectorLabels) {
  EXPECT_EQ(BoxClass::parse("plain text").kind(), BoxKind::kText);
  EXPECT_EQ(BoxClass::parse("title").kind(), BoxKind::kTitle);
  EXPECT_EQ(BoxClass::parse("figure").kind(), BoxKind::kFigure);
  EXPECT_EQ(BoxClass::parse("table").kind(), BoxKind::kTable);
  EXPECT_EQ(BoxClass::parse("abandon").kind(), BoxKind::kAbandoned);
  const auto eq = BoxClass::parse("isolate_formula");
  EXPECT_EQ(eq.kind(), BoxKind::kInvalid);
  EXPECT_EQ(eq.name(), "isolate_formula");
}

TEST(AssignColumns, ThreeSymmetricColumns) {
  auto p = assign_columns(page(1000, 1000, {box("a", 60, 100, 340, 300),
                                            box("b", 360, 100, 640, 300),
                                            box("c", 660, 100, 940, 300)}));
  ASSERT_EQ(p.columns.size(), 3u);
  EXPECT_EQ(find(p, "a").column, 0);
  EXPECT_EQ(find(p, "b").column, 1);
  EXPECT_EQ(find(p, "c").column, 2);
}

TEST(AssignColumns, WideBoxIsFullWidth) {
  auto p = assign_columns(page(1000, 1000, {box("wide", 50, 50, 950, 100),
                                            box("l", 50, 120, 480, 900),
                                            box("r", 520, 120, 950, 900),
                                            box("l2", 50, 910, 480, 990)}));
  ASSERT_EQ(p.columns.size(), 2u);
  EXPECT_TRUE(find(p, "wide").full_width);
  EXPECT_FALSE(find(p, "wide").column.has_value());
  EXPECT_EQ(find(p, "r").column, 1);
}

TEST(AssignColumns, NoTextBoxesLeavesColumnsEmpty) {
  auto p = assign_columns(
      page(100, 100, {box("f", 10, 10, 50, 50, BoxClass(BoxKind::kFigure))}));
  EXPECT_TRUE(p.columns.empty());
}

TEST(AssignColumns, MatchesBruteForceClustering) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = assign_columns(testing::random_newspaper(rng));
    std::vector<int> widths;
    for (const auto& b : p.boxes) {
      if (b.cls.kind() == BoxKind::kText) widths.push_back(b.width());
    }
    std::sort(widths.begin(), widths.end());
    const std::size_t n = widths.size();
    const double median =
        n % 2 ? widths[n / 2] : 0.5 * (widths[n / 2 - 1] + widths[n / 2]);
    std::vector<double> centers;
    std::vector<const BoundingBox*> members;
    for (const auto& b : p.boxes) {
      if (b.cls.kind() == BoxKind::kText && b.width() <= 1.5 * median) {
        centers.push_back(0.5 * (b.x1 + b.x2));
        members.push_back(&b);
      }
    }
    const auto expected = testing::brute_clusters(centers, median / 2);
    for (std::size_t i = 0; i < members.size(); ++i) {
      ASSERT_EQ(members[i]->column, expected[i]) << "trial " << trial;
    }
  }
}

TEST(ReadingOrder, ColumnsThenRows) {
  auto p = page(1000, 1000, {box("b", 520, 0, 900, 200), box("a2", 100, 300, 480, 500),
                             box("a1", 100, 0, 480, 200)});
  p = reading_order(assign_columns(std::move(p)));
  ASSERT_EQ(p.boxes.size(), 3u);
  EXPECT_EQ(p.boxes[0].id, "a1");
  EXPECT_EQ(p.boxes[1].id, "a2");
  EXPECT_EQ(p.boxes[2].id, "b");
}

TEST(ReadingOrder, FullWidthTitleFirst) {
  auto p = page(1000, 1000, {box("l", 100, 100, 480, 500), box("r", 520, 100, 900, 500),
                             box("t", 100, 0, 900, 80, BoxClass(BoxKind::kTitle))});
  p = reading_order(assign_columns(std::move(p)));
  EXPECT_EQ(p.boxes[0].id, "t");
  EXPECT_EQ(p.boxes[1].id, "l");
  EXPECT_EQ(p.boxes[2].id, "r");
}

TEST(ReadingOrder, MatchesComparatorOracleAndIsDense) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = assign_columns(testing::random_newspaper(rng));
    const auto expected = testing::brute_reading_order(p);
    const auto ordered = reading_order(p);
    ASSERT_EQ(ordered.boxes.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_EQ(ordered.boxes[i].id, expected[i]) << "trial " << trial;
      ASSERT_EQ(ordered.boxes[i].reading_order, static_cast<int>(i));
    }
  }
}

TEST(Postprocess, InvalidBecomesTitle) {
  auto p = page(1000, 1000, {box("t", 100, 100, 900, 800),
                             box("eq", 300, 820, 700, 860, BoxClass::invalid("equation"))});
  const auto out = postprocess_bboxes(p, {});
  bool seen_title = false;
  for (const auto& b : out.boxes) {
    EXPECT_NE(b.cls.kind(), BoxKind::kInvalid);
    seen_title = seen_title || b.cls.kind() == BoxKind::kTitle;
  }
  EXPECT_TRUE(seen_title);
}

TEST(Postprocess, LowerEdgeMeetsNextBox) {
  auto p = page(400, 1000, {box("a", 100, 100, 300, 200), box("b", 100, 220, 300, 300)});
  PostprocessConfig cfg;
  cfg.merge_height_ratio = 0.01;  // keep the boxes apart
  const auto out = postprocess_bboxes(p, cfg);
  ASSERT_EQ(out.boxes.size(), 2u);
  EXPECT_EQ(out.boxes[0].y1, 100);
  EXPECT_EQ(out.boxes[0].y2, 220);
  EXPECT_EQ(out.boxes[1].y1, 220);
}

TEST(Postprocess, AbandonedBandsAndLabelRemoved) {
  auto p = page(1000, 1000, {box("head", 100, 5, 900, 40),
                             box("num", 480, 960, 520, 990),
                             box("furn", 100, 500, 200, 520, BoxClass(BoxKind::kAbandoned)),
                             box("body", 100, 100, 900, 900)});
  const auto out = postprocess_bboxes(p, {});
  ASSERT_EQ(out.boxes.size(), 1u);
  EXPECT_EQ(out.boxes[0].cls.kind(), BoxKind::kText);
}

TEST(Postprocess, EmptyInputGivesEmptyLayout) {
  const auto out = postprocess_bboxes(page(100, 100, {}), {});
  EXPECT_TRUE(out.boxes.empty());
}

TEST(Postprocess, ClipsAndDropsOutsideBoxes) {
  auto p = page(1000, 1000, {box("in", 100, 100, 900, 900), box("out", 1100, 100, 1200, 200),
                             box("edge", 800, 850, 1100, 950)});
  const auto out = postprocess_bboxes(p, {});
  for (const auto& b : out.boxes) {
    EXPECT_GE(b.x1, 0);
    EXPECT_LE(b.x2, 1000);
    EXPECT_FALSE(b.rect().empty());
  }
}

TEST(Postprocess, IdsEncodeBlockColumnRow) {
  EXPECT_EQ(box_id_suffix(0, 1, 2), "B0C1R2");
  auto p = page(1000, 1000, {box("l", 100, 100, 480, 500), box("r", 520, 100, 900, 500)});
  PostprocessConfig cfg;
  const auto out = postprocess_bboxes(p, cfg);
  ASSERT_EQ(out.boxes.size(), 2u);
  EXPECT_EQ(out.boxes[0].id, p.page_id + "_B0C0R0");
  EXPECT_EQ(out.boxes[1].id, p.page_id + "_B0C1R0");
}

TEST(Postprocess, FillColumnsInsertsSyntheticText) {
  auto p = page(1000, 1000, {box("l", 100, 100, 480, 900), box("r", 520, 300, 900, 600),
                             box("r2", 520, 700, 900, 800)});
  PostprocessConfig cfg;
  cfg.fill_columns = true;
  cfg.merge_height_ratio = 0.01;
  const auto out = postprocess_bboxes(p, cfg);
  int synthetic = 0;
  for (const auto& b : out.boxes) {
    if (b.synthetic) {
      ++synthetic;
      EXPECT_EQ(b.cls.kind(), BoxKind::kText);
      EXPECT_EQ(b.confidence, 0.0);
    }
  }
  EXPECT_GE(synthetic, 1);
}

TEST(Postprocess, MinimumHeightDropsSlivers) {
  auto p = page(1000, 1000, {box("big", 100, 100, 900, 800), box("thin", 100, 850, 900, 855)});
  PostprocessConfig cfg;
  cfg.minimum_height_threshold = 10;
  const auto out = postprocess_bboxes(p, cfg);
  // The lower edge of "big" reaches "thin" first, so the sliver goes.
  for (const auto& b : out.boxes) EXPECT_GE(b.height(), 10);
}

TEST(Postprocess, MergesSmallAdjacentTextBoxes) {
  auto p = page(400, 1000, {box("a", 100, 100, 300, 150), box("b", 100, 150, 300, 200)});
  const auto out = postprocess_bboxes(p, {});
  ASSERT_EQ(out.boxes.size(), 1u);
  EXPECT_EQ(out.boxes[0].y1, 100);
  EXPECT_EQ(out.boxes[0].y2, 200);
}

TEST(Postprocess, ConfigValidation) {
  PostprocessConfig cfg;
  cfg.minimum_height_threshold = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.merge_height_ratio = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

void expect_invariants(const PageLayout& in, const PageLayout& out, bool fill) {
  // Same-column vertical overlap is zero; separators count in every column.
  for (std::size_t i = 0; i < out.boxes.size(); ++i) {
    const auto& a = out.boxes[i];
    EXPECT_NE(a.cls.kind(), BoxKind::kAbandoned);
    EXPECT_NE(a.cls.kind(), BoxKind::kInvalid);
    for (std::size_t j = i + 1; j < out.boxes.size(); ++j) {
      const auto& b = out.boxes[j];
      const bool same = a.full_width || b.full_width || a.column == b.column;
      const bool x_overlap = std::max(a.x1, b.x1) < std::min(a.x2, b.x2);
      if (same && x_overlap) {
        EXPECT_LE(std::min(a.y2, b.y2), std::max(a.y1, b.y1)) << a.id << " " << b.id;
      }
    }
  }
  const auto before = metrics::score_layout(in);
  const auto after = metrics::score_layout(out);
  EXPECT_GE(after.coverage, before.coverage);
  if (fill) {
    const Rect area = out.print_area;
    for (int c = 0; c < static_cast<int>(out.columns.size()); ++c) {
      std::vector<std::pair<int, int>> spans;
      for (const auto& b : out.boxes) {
        if (b.full_width || b.column == c) spans.push_back({b.y1, b.y2});
      }
      std::sort(spans.begin(), spans.end());
      int reach = area.y1;
      for (const auto& [y1, y2] : spans) {
        EXPECT_LE(y1, reach) << "void in column " << c;
        reach = std::max(reach, y2);
      }
      EXPECT_GE(reach, area.y2);
    }
  }
}

TEST(Postprocess, InvariantsOnSyntheticPages) {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto in = testing::random_newspaper(rng);
    for (bool fill : {false, true}) {
      PostprocessConfig cfg;
      cfg.fill_columns = fill;
      const auto out = postprocess_bboxes(in, cfg);
      SCOPED_TRACE(::testing::Message() << "trial " << trial << " fill " << fill);
      expect_invariants(in, out, fill);
      EXPECT_EQ(postprocess_bboxes(out, cfg), out);
      EXPECT_EQ(postprocess_bboxes(in, cfg), out);
    }
  }
}

TEST(LayoutIo, RoundTrip) {
  Rng rng(14);
  auto p = postprocess_bboxes(testing::random_newspaper(rng), {});
  p.image = "pages/x.png";
  p.boxes[0].tiles = {{0, 10}, {8, 10}};
  const auto line = serialize_layout(p);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(parse_layout(line), p);
}

TEST(LayoutIo, RejectsMalformed) {
  EXPECT_THROW(parse_layout("{"), FormatError);
  EXPECT_THROW(parse_layout(R"({"page_id":"p","width":10})"), FormatError);
  EXPECT_THROW(parse_layout(
                   R"({"page_id":"p","width":10,"height":10,"boxes":[{"x1":0}]})"),
               FormatError);
}

}  // namespace
}  // namespace newsprint::layout
