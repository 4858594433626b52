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

#include "newsprint/layout/reading_order.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

namespace newsprint::layout {

PageLayout reading_order(PageLayout layout) {
  auto& boxes = layout.boxes;
  const std::size_t n = boxes.size();

  std::vector<std::size_t> seps;
  for (std::size_t i = 0; i < n; ++i) {
    if (boxes[i].full_width) seps.push_back(i);
  }
  std::sort(seps.begin(), seps.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(boxes[a].y1, boxes[a].x1, boxes[a].id) <
           std::tie(boxes[b].y1, boxes[b].x1, boxes[b].id);
  });
  std::vector<int> sep_tops;
  sep_tops.reserve(seps.size());
  for (auto i : seps) sep_tops.push_back(boxes[i].y1);

  // (block, column, -1 for separators)
  std::vector<std::pair<int, int>> key(n);
  for (std::size_t r = 0; r < seps.size(); ++r) {
    key[seps[r]] = {static_cast<int>(r) + 1, -1};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (boxes[i].full_width) continue;
    const auto block = std::upper_bound(sep_tops.begin(), sep_tops.end(),
                                        boxes[i].y1) -
                       sep_tops.begin();
    key[i] = {static_cast<int>(block), boxes[i].column.value_or(0)};
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(key[a], boxes[a].y1, boxes[a].x1, boxes[a].id) <
           std::tie(key[b], boxes[b].y1, boxes[b].x1, boxes[b].id);
  });

  std::vector<BoundingBox> sorted;
  sorted.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    sorted.push_back(std::move(boxes[order[r]]));
    sorted.back().reading_order = static_cast<int>(r);
  }
  boxes = std::move(sorted);
  return layout;
}

}  // namespace newsprint::layout
