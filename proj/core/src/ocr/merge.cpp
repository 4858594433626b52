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

#include "newsprint/ocr/merge.hpp"

#include <algorithm>
#include <cmath>

#include "newsprint/image/tiles.hpp"
#include "newsprint/util/strings.hpp"

namespace newsprint::ocr {
namespace {

std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

bool seam_matches(const std::vector<std::string>& l,
                  const std::vector<std::string>& r, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    if (line_similarity(l[l.size() - k + i], r[i]) < kLineMatchThreshold) {
      return false;
    }
  }
  return true;
}

// Number of leading lines of r that repeat the end of l. Runs of identical
// lines (typically blank) can match at several lengths; the nominal overlap
// wins when it is among them, otherwise the longest match.
std::size_t seam_overlap(const std::vector<std::string>& l,
                         const std::vector<std::string>& r,
                         std::size_t nominal) {
  if (nominal > 0 && nominal <= std::min(l.size(), r.size()) &&
      seam_matches(l, r, nominal)) {
    return nominal;
  }
  for (std::size_t k = std::min(l.size(), r.size()); k > 0; --k) {
    if (seam_matches(l, r, k)) return k;
  }
  return 0;
}

std::string merge_pair(const std::string& left, const std::string& right,
                       std::size_t nominal) {
  auto l = split_lines(left);
  auto r = split_lines(right);
  std::size_t k = seam_overlap(l, r, nominal);
  if (k == 0) {
    // Model replies often carry stray blank lines at either end.
    while (!l.empty() && trim(l.back()).empty()) l.pop_back();
    std::size_t lead = 0;
    while (lead < r.size() && trim(r[lead]).empty()) ++lead;
    r.erase(r.begin(), r.begin() + static_cast<long>(lead));
    k = seam_overlap(l, r, 0);
  }
  l.insert(l.end(), r.begin() + static_cast<long>(k), r.end());
  return join(l, "\n");
}

}  // namespace

double line_similarity(std::string_view a, std::string_view b) {
  const auto ua = utf8_decode(trim(a));
  const auto ub = utf8_decode(trim(b));
  const std::size_t m = std::max(ua.size(), ub.size());
  if (m == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(ua, ub)) /
                   static_cast<double>(m);
}

std::string merge_tile_texts(const std::vector<std::string>& tiles,
                             double overlap_fraction) {
  if (tiles.empty()) return {};
  if (overlap_fraction <= 0) return join(tiles, "\n");
  std::string acc = tiles.front();
  for (std::size_t i = 1; i < tiles.size(); ++i) {
    // Interior seams overlap by the nominal share of the previous tile's
    // lines; the last tile is re-anchored and may overlap more, so it takes
    // the longest match.
    std::size_t nominal = 0;
    if (i + 1 < tiles.size()) {
      const double lines = static_cast<double>(split_lines(tiles[i - 1]).size());
      nominal = static_cast<std::size_t>(std::ceil(overlap_fraction * lines - 1e-9));
    }
    acc = merge_pair(acc, tiles[i], nominal);
  }
  return acc;
}

std::vector<std::string> split_text_overlapping(std::string_view text,
                                               int lines_per_tile,
                                               double overlap_fraction) {
  const auto lines = split_lines(text);
  std::vector<std::string> tiles;
  for (const auto& span : image::tile_spans(static_cast<int>(lines.size()),
                                            lines_per_tile, overlap_fraction)) {
    const auto first = lines.begin() + span.y_offset;
    tiles.push_back(join({first, first + span.height}, "\n"));
  }
  return tiles;
}

}  // namespace newsprint::ocr
